// Copyright 2026 The Putlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "putlab/source_set.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "putlab/simplex.h"

namespace putlab {

namespace {

// Does the convex hull of the members contain the uniform distribution?
// Decided by a small feasibility LP over the mixing weights.
bool HullContainsUniform(const std::vector<Prior>& members,
                         const ProductSpace& space) {
  const int k = static_cast<int>(members.size());
  const double u = 1.0 / static_cast<double>(space.size());
  LpProblem lp;
  lp.objective.assign(k, 0.0);
  for (std::int64_t x = 0; x < space.size(); ++x) {
    LpRow row;
    row.coeffs.resize(k);
    for (int i = 0; i < k; ++i) row.coeffs[i] = members[i][x];
    row.cmp = LpCmp::kEq;
    row.rhs = u;
    lp.rows.push_back(std::move(row));
  }
  LpRow mass;
  mass.coeffs.assign(k, 1.0);
  mass.cmp = LpCmp::kEq;
  mass.rhs = 1.0;
  lp.rows.push_back(std::move(mass));
  return LpFeasible(lp);
}

// max over the hull of the smallest coordinate, plus the attaining point's
// largest coordinate. Variables: mixing weights and the floor t.
struct HullMinMax {
  double min_mass;  // max-min coordinate over the hull
  double eta;       // max coordinate of the maximizing point
};

HullMinMax MaximizeMinCoordinate(const std::vector<Prior>& members,
                                 const ProductSpace& space) {
  const int k = static_cast<int>(members.size());
  LpProblem lp;
  lp.objective.assign(k + 1, 0.0);
  lp.objective[k] = -1.0;  // maximize t
  for (std::int64_t x = 0; x < space.size(); ++x) {
    LpRow row;
    row.coeffs.resize(k + 1);
    for (int i = 0; i < k; ++i) row.coeffs[i] = members[i][x];
    row.coeffs[k] = -1.0;
    row.cmp = LpCmp::kGe;
    row.rhs = 0.0;
    lp.rows.push_back(std::move(row));
  }
  LpRow mass;
  mass.coeffs.assign(k + 1, 0.0);
  for (int i = 0; i < k; ++i) mass.coeffs[i] = 1.0;
  mass.cmp = LpCmp::kEq;
  mass.rhs = 1.0;
  lp.rows.push_back(std::move(mass));

  LpSolution s = SolveLp(lp);
  if (s.status != LpStatus::kOptimal) {
    throw std::logic_error("hull min-coordinate LP must be solvable");
  }
  double eta = 0.0;
  for (std::int64_t x = 0; x < space.size(); ++x) {
    double px = 0.0;
    for (int i = 0; i < k; ++i) px += s.x[i] * members[i][x];
    eta = std::max(eta, px);
  }
  return HullMinMax{s.x[k], eta};
}

// A coordinate order sorting every member non-increasingly, if one exists.
// Lexicographic sort over the member tuples is a linear extension of the
// dominance order, so verifying it suffices.
bool HasCommonOrdering(const std::vector<Prior>& members, std::int64_t size) {
  std::vector<std::int64_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int64_t a, std::int64_t b) {
                     for (const Prior& p : members) {
                       if (p[a] > p[b] + kProbabilityTolerance) return true;
                       if (p[b] > p[a] + kProbabilityTolerance) return false;
                     }
                     return false;
                   });
  for (const Prior& p : members) {
    for (std::int64_t i = 1; i < size; ++i) {
      if (p[order[i]] > p[order[i - 1]] + kProbabilityTolerance) return false;
    }
  }
  return true;
}

}  // namespace

SourceSet::SourceSet(ProductSpace space, bool full_simplex,
                     std::vector<Prior> members)
    : space_(space), full_simplex_(full_simplex), members_(std::move(members)) {
  const double unit = 1.0 / static_cast<double>(space_.size());
  if (full_simplex_) {
    class_tag_ = SourceClass::kClassI;
    theta_star_ = 1.0;
    eta_ = unit;
    // The simplex is represented by its uniform member where a concrete
    // member is needed (smallest-probability extraction, Wang-loss maxima).
    min_member_probability_ = unit;
    return;
  }
  for (const Prior& p : members_) {
    if (!(p.space() == space_)) {
      throw std::invalid_argument("family members live on different spaces");
    }
  }

  bool class1 = false;
  if (members_.size() == 1) {
    class1 = members_[0].IsUniform();
    theta_star_ = members_[0].MinProbability() * space_.size();
    eta_ = members_[0].MaxProbability();
  } else {
    HullMinMax hull = MaximizeMinCoordinate(members_, space_);
    theta_star_ = hull.min_mass * space_.size();
    eta_ = hull.eta;
    class1 = theta_star_ >= 1.0 - 1e-9 || HullContainsUniform(members_, space_);
    if (class1) {
      theta_star_ = 1.0;
      eta_ = unit;
    }
  }
  theta_star_ = std::min(theta_star_, 1.0);

  if (class1) {
    class_tag_ = SourceClass::kClassI;
  } else if (HasCommonOrdering(members_, space_.size())) {
    class_tag_ = SourceClass::kClassII;
  } else {
    class_tag_ = SourceClass::kClassIII;
  }

  min_member_probability_ = 1.0;
  for (const Prior& p : members_) {
    min_member_probability_ =
        std::min(min_member_probability_, p.MinProbability());
  }
}

SourceSet SourceSet::Singleton(Prior prior) {
  ProductSpace space = prior.space();
  return SourceSet(space, false, std::vector<Prior>{std::move(prior)});
}

SourceSet SourceSet::FullSimplex(ProductSpace space) {
  return SourceSet(space, true, {});
}

SourceSet SourceSet::FiniteFamily(std::vector<Prior> members) {
  if (members.empty()) {
    throw std::invalid_argument("finite family needs at least one member");
  }
  ProductSpace space = members[0].space();
  return SourceSet(space, false, std::move(members));
}

bool IsValid(const Mechanism& q, const SourceSet& source_set, double budget) {
  if (budget < 0) {
    throw std::invalid_argument("distortion budget must be non-negative");
  }
  if (!(q.space_in() == source_set.space())) {
    throw std::invalid_argument("mechanism and source set spaces differ");
  }
  if (source_set.is_full_simplex()) {
    // Distortion is linear in the prior, so the simplex is dominated by its
    // vertices; a vertex at x sees only row x.
    for (std::int64_t x = 0; x < q.size_in(); ++x) {
      if (RowDistortion(q, x) > budget + kProbabilityTolerance) return false;
    }
    return true;
  }
  for (const Prior& p : source_set.members()) {
    if (ExpectedDistortion(q, p) > budget + kProbabilityTolerance) return false;
  }
  return true;
}

}  // namespace putlab
