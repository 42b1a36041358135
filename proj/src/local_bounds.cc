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

#include "putlab/local_bounds.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "putlab/global_bounds.h"
#include "putlab/simplex.h"

namespace putlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Clamp0(double v) { return v > 0.0 ? v : 0.0; }

void RequireLocalSorted(const Prior& prior) {
  if (prior.space().n() != 1) {
    throw std::invalid_argument("known-prior closed forms are one-coordinate");
  }
  if (!prior.IsSortedNonIncreasing()) {
    throw std::invalid_argument(
        "prior must be sorted non-increasing; see SortWithPermutation");
  }
}

// Minimizes f on [lo, hi] with a coarse grid followed by golden-section
// refinement of the best cell.
double GridGoldenMinimum(const std::function<double(double)>& f, double lo,
                         double hi, int grid_points, double width) {
  double best_x = lo;
  double best_f = kInf;
  for (int i = 0; i <= grid_points; ++i) {
    const double x = lo + (hi - lo) * i / grid_points;
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
  }
  if (best_f == kInf) return kInf;
  const double cell = (hi - lo) / grid_points;
  constexpr double kInvPhi = 0.6180339887498949;
  double a = std::max(lo, best_x - cell);
  double b = std::min(hi, best_x + cell);
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
  return std::min({best_f, fc, fd});
}

}  // namespace

std::vector<double> CumulativeTails(const Prior& sorted_prior) {
  RequireLocalSorted(sorted_prior);
  const std::int64_t m = sorted_prior.size();
  std::vector<double> tails(m + 1, 0.0);
  for (std::int64_t k = 1; k <= m; ++k) {
    tails[k] = tails[k - 1] + sorted_prior[m - k];
  }
  return tails;
}

double AdpKnownPrior(const Prior& sorted_prior, double distortion,
                     double delta) {
  RequireLocalSorted(sorted_prior);
  if (!(distortion > 0.0)) {
    throw std::invalid_argument("distortion must be positive");
  }
  if (delta < 0.0 || delta >= 1.0) {
    throw std::invalid_argument("delta must lie in [0,1)");
  }
  const int m = static_cast<int>(sorted_prior.size());
  const std::vector<double> tails = CumulativeTails(sorted_prior);
  // The tails carry accumulated rounding, so the zero-region boundary gets a
  // one-ulp-scale band; the spec's jump discontinuity sits exactly on it.
  if (distortion >= (1.0 - delta) * tails[m - 1] - 1e-12) return 0.0;
  double best = kInf;
  for (int k = 1; k <= m; ++k) {
    const double floor = (1.0 - delta) * tails[k - 1];
    if (!(distortion > floor)) continue;
    const double num = (m - k) * (1.0 - distortion - delta);
    const double den = distortion - floor;
    best = std::min(best, num > 0.0 ? std::log(num / den) : -kInf);
  }
  return Clamp0(best);
}

double DpKnownPrior(const Prior& sorted_prior, double distortion) {
  return AdpKnownPrior(sorted_prior, distortion, 0.0);
}

double MlKnownPrior(const Prior& sorted_prior, double distortion) {
  RequireLocalSorted(sorted_prior);
  if (!(distortion > 0.0) || distortion > 1.0) {
    throw std::invalid_argument("distortion must lie in (0, 1]");
  }
  const int m = static_cast<int>(sorted_prior.size());
  const std::vector<double> tails = CumulativeTails(sorted_prior);
  int bracket = m;
  for (int k = 1; k <= m; ++k) {
    if (distortion <= tails[k]) {
      bracket = k;
      break;
    }
  }
  const double gap = tails[bracket] - tails[bracket - 1];
  const double arg =
      m - bracket - (distortion - tails[bracket]) / gap;
  return Clamp0(arg > 0.0 ? std::log(arg) : -kInf);
}

double MlDistortionFromLeakage(const SourceSet& source_set, double eps) {
  if (source_set.is_full_simplex()) {
    throw std::invalid_argument(
        "leakage inversion needs concrete members (singleton or family)");
  }
  if (eps < 0.0) {
    throw std::invalid_argument("leakage budget must be non-negative");
  }
  double worst = 0.0;
  for (const Prior& member : source_set.members()) {
    RequireLocalSorted(member);
    const int m = static_cast<int>(member.size());
    if (eps >= std::log(static_cast<double>(m))) continue;  // zero distortion
    const double scale = std::exp(eps);
    const int k = std::max(1, std::min(m - 1, static_cast<int>(scale)));
    const std::vector<double> tails = CumulativeTails(member);
    worst = std::max(worst, tails[m - k] + member[k] * (k - scale));
  }
  return worst;
}

double AdpSourceSetClass2(const SourceSet& family, double distortion,
                          double delta) {
  if (family.is_full_simplex() || family.members().empty()) {
    throw std::invalid_argument("the program needs a finite family");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0,1)");
  }
  if (!(distortion > 0.0)) {
    throw std::invalid_argument("distortion must be positive");
  }
  const int m = static_cast<int>(family.space().size());
  if (family.space().n() != 1) {
    throw std::invalid_argument("the program is one-coordinate");
  }
  std::vector<std::vector<double>> tails;
  double zero_at = 0.0;
  for (const Prior& member : family.members()) {
    RequireLocalSorted(member);
    tails.push_back(CumulativeTails(member));
    zero_at = std::max(zero_at, (1.0 - delta) * tails.back()[m - 1]);
  }
  if (distortion >= zero_at - 1e-12) return 0.0;
  const int k_members = static_cast<int>(tails.size());
  const double d = distortion;

  // Dual of the diagonal-increment program at a fixed leading entry, with one
  // multiplier per member distortion constraint plus the mass and ordering
  // multipliers folded in.
  auto inner = [&](double alpha1) -> double {
    LpProblem lp;
    lp.objective.resize(k_members + 2);
    for (int p = 0; p < k_members; ++p) lp.objective[p] = alpha1 - 1.0 + d;
    lp.objective[k_members] = m * (alpha1 - delta) - 1.0 + delta;
    lp.objective[k_members + 1] = alpha1 - delta;
    for (int j = 1; j <= m - 1; ++j) {
      LpRow row;
      row.coeffs.resize(k_members + 2);
      for (int p = 0; p < k_members; ++p) row.coeffs[p] = tails[p][j];
      row.coeffs[k_members] = j;
      row.coeffs[k_members + 1] = 1.0;
      row.cmp = LpCmp::kGe;
      row.rhs = j;
      lp.rows.push_back(std::move(row));
    }
    LpSolution s = SolveLp(lp);
    if (s.status != LpStatus::kOptimal) return -kInf;  // no valid mechanism here
    return s.objective;
  };

  auto objective = [&](double alpha1) -> double {
    if (alpha1 >= 1.0) return kInf;
    const double inner_value = inner(alpha1);
    if (inner_value == -kInf) return kInf;
    const double numerator =
        std::max(1.0 - alpha1, (m - 1) * (alpha1 - delta) - inner_value);
    return std::log(numerator) - std::log1p(-alpha1);
  };

  const double best =
      GridGoldenMinimum(objective, 1.0 - d, 1.0 - 1e-12, 1024, 1e-9);
  return Clamp0(best);
}

BoundPair Class1Pd(const PrivacyNotion& notion, int m, double distortion,
                   const SourceSet& source_set) {
  if (source_set.class_tag() != SourceClass::kClassI) {
    throw std::invalid_argument("these closed forms need a Class I source set");
  }
  if (source_set.space().n() != 1 || source_set.space().m() != m) {
    throw std::invalid_argument("source set must live on {1..m}, n = 1");
  }
  const double d = distortion;
  if (!(d > 0.0) || d > 1.0) {
    throw std::invalid_argument("distortion must lie in (0, 1]");
  }

  BoundPair out;
  const double zero_from = (m - 1.0) / m;
  if (notion.kind() != NotionKind::kApproxDp && d >= zero_from) {
    out.exact = true;
    return out;
  }

  switch (notion.kind()) {
    case NotionKind::kDp:
      out.lower = out.upper = WangLossDp(m, 1, d);
      out.exact = true;
      break;
    case NotionKind::kApproxDp: {
      const double num = (m - 1) * (1.0 - d - notion.delta());
      out.lower = out.upper = Clamp0(num > 0.0 ? std::log(num / d) : -kInf);
      out.exact = true;
      break;
    }
    case NotionKind::kMaxInfo: {
      out.lower = Clamp0(std::log(m * (1.0 - d)));
      const double floor = source_set.min_member_probability();
      const double mix = floor * (1.0 - d - d / (m - 1.0)) + d / (m - 1.0);
      out.upper = Clamp0(std::log((1.0 - d) / mix));
      break;
    }
    case NotionKind::kMaxLeakage:
      out.lower = out.upper = Clamp0(std::log(m * (1.0 - d)));
      out.exact = true;
      break;
    case NotionKind::kRenyiDp: {
      const double alpha = notion.alpha();
      out.lower = ThetaLowerRenyiDp(m, 1, d, alpha, 1.0);
      out.upper = WangLossRenyiDp(m, 1, d, alpha);
      break;
    }
    case NotionKind::kSibsonMi: {
      const double alpha = notion.alpha();
      out.lower = std::max(WangLossMutualInfoUniform(m, 1, d),
                           ThetaLowerSibson(m, 1, d, alpha, 1.0));
      out.upper = WangLossSibsonUniform(m, 1, d, alpha);
      break;
    }
    case NotionKind::kMutualInfo:
      out.lower = out.upper = WangLossMutualInfoUniform(m, 1, d);
      out.exact = true;
      break;
  }
  out.lower = std::min(out.lower, out.upper);
  return out;
}

}  // namespace putlab
