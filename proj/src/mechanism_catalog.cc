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

#include "putlab/mechanism_catalog.h"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "putlab/simplex.h"

namespace putlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimizes f on [lo, hi] by golden-section search down to the given width.
// f must be unimodal on the bracket; callers localize with a coarse grid
// first.
double GoldenMinimize(const std::function<double(double)>& f, double lo,
                      double hi, double width) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

void RequireSorted(const Prior& prior) {
  if (prior.space().n() != 1) {
    throw std::invalid_argument("known-prior constructions are one-coordinate");
  }
  if (!prior.IsSortedNonIncreasing()) {
    throw std::invalid_argument(
        "prior must be sorted non-increasing; see SortWithPermutation");
  }
}

}  // namespace

Mechanism DiagonalFillMechanism(const ProductSpace& space,
                                const std::vector<double>& diag,
                                const std::vector<double>& weight) {
  if (space.n() != 1 ||
      diag.size() != static_cast<size_t>(space.size()) ||
      weight.size() != diag.size()) {
    throw std::invalid_argument("diagonal fill needs m-length vectors, n = 1");
  }
  const int m = static_cast<int>(diag.size());
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      if (j != i) total += weight[j];
    }
    rows[i][i] = diag[i];
    const double spread = 1.0 - diag[i];
    if (spread <= 1e-15 || total <= 0.0) {
      rows[i][i] = 1.0;
      continue;
    }
    for (int j = 0; j < m; ++j) {
      if (j != i) rows[i][j] = weight[j] * spread / total;
    }
  }
  return Mechanism(space, std::move(rows));
}

Mechanism UniformMechanism(const ProductSpace& space) {
  const double u = 1.0 / static_cast<double>(space.size());
  return Mechanism(space, std::vector<std::vector<double>>(
                              space.size(), std::vector<double>(space.size(), u)));
}

Mechanism IdentityMechanism(const ProductSpace& space) {
  std::vector<std::vector<double>> rows(
      space.size(), std::vector<double>(space.size(), 0.0));
  for (std::int64_t x = 0; x < space.size(); ++x) rows[x][x] = 1.0;
  return Mechanism(space, std::move(rows));
}

Mechanism WangMechanism(const ProductSpace& space, double distortion) {
  const int m = space.m();
  const int n = space.n();
  if (!(distortion > 0.0) || distortion > n) {
    throw std::invalid_argument("distance-exponential mechanism needs 0 < D <= n");
  }
  std::vector<std::vector<double>> rows(
      space.size(), std::vector<double>(space.size(), 0.0));
  if (distortion == static_cast<double>(n)) {
    // Limit case: all mass on the farthest shell.
    const double v = std::pow(1.0 / (m - 1), n);
    for (std::int64_t x = 0; x < space.size(); ++x) {
      for (std::int64_t y = 0; y < space.size(); ++y) {
        if (space.HammingDistance(x, y) == n) rows[x][y] = v;
      }
    }
    return Mechanism(space, std::move(rows));
  }
  const double ratio = (m - 1) * (n - distortion) / distortion;
  const double scale = std::pow(1.0 - distortion / n, n);
  // Entries depend on the Hamming distance alone.
  std::vector<double> by_distance(n + 1);
  for (int l = 0; l <= n; ++l) {
    by_distance[l] = scale * std::pow(ratio, -l);
  }
  for (std::int64_t x = 0; x < space.size(); ++x) {
    for (std::int64_t y = 0; y < space.size(); ++y) {
      rows[x][y] = by_distance[space.HammingDistance(x, y)];
    }
  }
  return Mechanism(space, std::move(rows));
}

Mechanism QDeltaMechanism(int m, double delta) {
  if (m < 2) {
    throw std::invalid_argument("alphabet size m must be at least 2");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0,1)");
  }
  ProductSpace space(m, 1);
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  rows[0][0] = 1.0;
  for (int i = 1; i < m; ++i) {
    rows[i][0] = 1.0 - delta;
    rows[i][i] = delta;
  }
  return Mechanism(space, std::move(rows));
}

Mechanism OptimalAdpMechanism(const Prior& sorted_prior, double distortion,
                              double delta) {
  RequireSorted(sorted_prior);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0,1)");
  }
  const int m = sorted_prior.space().m();
  const double tail = 1.0 - sorted_prior[0];  // mass below the top symbol
  if (!(distortion > 0.0) || distortion >= (1.0 - delta) * tail) {
    throw std::invalid_argument(
        "distortion must lie in (0, (1-delta)(1-P_1)); outside it the "
        "trade-off is already zero");
  }
  const double d = distortion;

  // Remaining diagonals at a fixed leading entry: minimize their total mass
  // subject to validity, enough total mass above delta, and the ordering.
  auto inner_lp = [&](double alpha1) -> LpSolution {
    LpProblem lp;
    lp.objective.assign(m - 1, 1.0);
    LpRow validity;
    validity.coeffs.resize(m - 1);
    for (int j = 1; j < m; ++j) validity.coeffs[j - 1] = sorted_prior[j];
    validity.cmp = LpCmp::kGe;
    validity.rhs = 1.0 - d - sorted_prior[0] * alpha1;
    lp.rows.push_back(std::move(validity));
    LpRow mass;
    mass.coeffs.assign(m - 1, 1.0);
    mass.cmp = LpCmp::kGe;
    mass.rhs = 1.0 - alpha1 + (m - 1) * delta;
    lp.rows.push_back(std::move(mass));
    for (int j = 0; j < m - 1; ++j) {
      LpRow order;
      order.coeffs.assign(m - 1, 0.0);
      order.coeffs[j] = 1.0;
      if (j > 0) order.coeffs[j - 1] = -1.0;
      order.cmp = LpCmp::kLe;
      order.rhs = j == 0 ? alpha1 : 0.0;
      lp.rows.push_back(std::move(order));
    }
    LpRow floor;
    floor.coeffs.assign(m - 1, 0.0);
    floor.coeffs[m - 2] = 1.0;
    floor.cmp = LpCmp::kGe;
    floor.rhs = delta;
    lp.rows.push_back(std::move(floor));
    return SolveLp(lp);
  };

  auto objective = [&](double alpha1) -> double {
    if (alpha1 >= 1.0) return kInf;
    LpSolution s = inner_lp(alpha1);
    if (s.status != LpStatus::kOptimal) return kInf;
    const double excess = s.objective - (m - 1) * delta;
    if (excess <= 0.0) return kInf;
    return std::log(excess) - std::log1p(-alpha1);
  };

  // Coarse grid, then golden refinement around the best cell.
  const double lo = 1.0 - d;
  const double hi = 1.0 - 1e-12;
  constexpr int kGridPoints = 1024;
  double best_x = lo;
  double best_f = kInf;
  for (int i = 0; i <= kGridPoints; ++i) {
    const double x = lo + (hi - lo) * i / kGridPoints;
    const double f = objective(x);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }
  if (best_f == kInf) {
    throw std::invalid_argument("no feasible diagonal sweep point");
  }
  const double cell = (hi - lo) / kGridPoints;
  const double alpha1 = GoldenMinimize(objective, std::max(lo, best_x - cell),
                                       std::min(hi, best_x + cell), 1e-9);

  LpSolution inner = inner_lp(alpha1);
  if (inner.status != LpStatus::kOptimal) {
    throw std::logic_error("refined sweep point lost feasibility");
  }
  std::vector<double> diag(m);
  diag[0] = alpha1;
  for (int j = 1; j < m; ++j) diag[j] = inner.x[j - 1];
  // Snap LP jitter around the delta floor: a diagonal a hair above delta
  // would put a positive numerator over an exactly-zero column and blow the
  // loss to infinity.
  for (double& v : diag) {
    if (v < delta + 1e-9) v = delta;
  }

  std::vector<double> weight(m);
  for (int j = 0; j < m; ++j) weight[j] = std::max(0.0, diag[j] - delta);
  return DiagonalFillMechanism(sorted_prior.space(), diag, weight);
}

Mechanism OptimalMlMechanism(const Prior& sorted_prior, double distortion) {
  RequireSorted(sorted_prior);
  const int m = sorted_prior.space().m();
  const double tail = 1.0 - sorted_prior[0];
  if (!(distortion > 0.0) || distortion >= tail) {
    throw std::invalid_argument(
        "distortion must lie in (0, 1-P_1); outside it the leakage floor is "
        "already zero");
  }

  // Diagonal LP: minimize the column-maximum total.
  LpProblem lp;
  lp.objective.assign(m, 1.0);
  LpRow validity;
  validity.coeffs.resize(m);
  for (int j = 0; j < m; ++j) validity.coeffs[j] = sorted_prior[j];
  validity.cmp = LpCmp::kGe;
  validity.rhs = 1.0 - distortion;
  lp.rows.push_back(std::move(validity));
  LpRow mass;
  mass.coeffs.assign(m, 1.0);
  mass.cmp = LpCmp::kGe;
  mass.rhs = 1.0;
  lp.rows.push_back(std::move(mass));
  for (int j = 0; j < m; ++j) {
    LpRow order;
    order.coeffs.assign(m, 0.0);
    order.coeffs[j] = 1.0;
    if (j > 0) order.coeffs[j - 1] = -1.0;
    order.cmp = LpCmp::kLe;
    order.rhs = j == 0 ? 1.0 : 0.0;
    lp.rows.push_back(std::move(order));
  }
  LpSolution s = SolveLp(lp);
  if (s.status != LpStatus::kOptimal) {
    throw std::logic_error("leakage diagonal LP must be solvable");
  }
  return DiagonalFillMechanism(sorted_prior.space(), s.x, s.x);
}

}  // namespace putlab
