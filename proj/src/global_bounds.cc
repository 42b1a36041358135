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

#include "putlab/global_bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace putlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// max{0, v}; negative interiors (v = -inf from a non-positive log argument)
// clamp to zero exactly as displayed.
double Clamp0(double v) { return v > 0.0 ? v : 0.0; }

double LogOrNegInf(double arg) { return arg > 0.0 ? std::log(arg) : -kInf; }

double LogSumExp2(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double peak = std::max(a, b);
  return peak + std::log(std::exp(a - peak) + std::exp(b - peak));
}

double LogSumExp3(double a, double b, double c) {
  return LogSumExp2(LogSumExp2(a, b), c);
}

}  // namespace

double WangLossDp(int m, int n, double d) {
  return Clamp0(LogOrNegInf((m - 1) * (n - d) / d));
}

double WangLossApproxDp(int m, int n, double d, double delta) {
  const double arg = (m - 1) * ((n - d) / d) *
                     (1.0 - delta * std::pow(1.0 - d / n, -n));
  return Clamp0(LogOrNegInf(arg));
}

double WangLossMaxLeakage(int m, int n, double d) {
  return Clamp0(n * LogOrNegInf(m * (1.0 - d / n)));
}

double WangLossRenyiDp(int m, int n, double d, double alpha) {
  const double ratio = (m - 1) * (n - d) / d;
  if (!(ratio > 0.0)) return 0.0;
  const double log_ratio = std::log(ratio);
  // log(m - 2 + ratio^alpha + ratio^(1-alpha)) without overflow.
  const double tail = LogSumExp3(
      m > 2 ? std::log(static_cast<double>(m - 2)) : -kInf,
      alpha * log_ratio, (1.0 - alpha) * log_ratio);
  const double v = (std::log(d / (n * (m - 1.0))) + tail) / (alpha - 1.0);
  return Clamp0(v);
}

double WangLossSibsonUniform(int m, int n, double d, double alpha) {
  if (!(d < n)) return 0.0;
  const double tail =
      LogSumExp2(alpha * std::log(n - d),
                 alpha * std::log(d) + (1.0 - alpha) * std::log(m - 1.0));
  const double v = n * (std::log(static_cast<double>(m)) + tail / (alpha - 1.0)) -
                   alpha / (alpha - 1.0) * n * std::log(static_cast<double>(n));
  return Clamp0(v);
}

double WangLossMutualInfoUniform(int m, int n, double d) {
  if (!(d < n)) return 0.0;
  const double v = n * std::log(m * (1.0 - d / n)) +
                   d * std::log(d / ((m - 1.0) * (n - d)));
  return Clamp0(v);
}

double WangLossMaxInfoMember(const ProductSpace& space, double d,
                             const Prior& member) {
  const int m = space.m();
  const int n = space.n();
  const double ratio = (m - 1) * (n - d) / d;
  if (!(ratio > 0.0)) return 0.0;
  // min over outputs of sum_l ratio^-l P(shell l around y).
  double smallest = kInf;
  std::vector<double> shell(n + 1);
  for (std::int64_t y = 0; y < space.size(); ++y) {
    std::fill(shell.begin(), shell.end(), 0.0);
    for (std::int64_t x = 0; x < space.size(); ++x) {
      shell[space.HammingDistance(x, y)] += member[x];
    }
    double total = 0.0;
    double weight = 1.0;
    for (int l = 0; l <= n; ++l) {
      total += shell[l] * weight;
      weight /= ratio;
    }
    smallest = std::min(smallest, total);
  }
  return Clamp0(-std::log(smallest));
}

double ThetaLowerDp(int m, int n, double d, double theta) {
  return Clamp0(LogOrNegInf((m - 1) * (theta * n - d) / d));
}

double ThetaLowerApproxDp(int m, int n, double d, double delta, double theta) {
  const double arg =
      (m - 1) * (theta * n * (1.0 - delta * std::pow(m, n - 1)) - d) / d;
  return Clamp0(LogOrNegInf(arg));
}

double ThetaLowerMaxInfo(int m, int n, double d, double theta) {
  return Clamp0(LogOrNegInf(m * (1.0 - d / (theta * n))));
}

double ThetaLowerMaxLeakage(int m, int n, double d, double theta) {
  return ThetaLowerMaxInfo(m, n, d, theta);
}

double ThetaLowerRenyiDp(int m, int n, double d, double alpha, double theta) {
  const double scaled = d / theta;
  const double base = n - scaled;
  if (!(base > 0.0)) return 0.0;
  const double v = std::log(m - 1.0) + alpha / (alpha - 1.0) * std::log(base) -
                   std::log(scaled) -
                   (std::log(static_cast<double>(n)) +
                    (n - 1) * std::log(static_cast<double>(m))) /
                       (alpha - 1.0);
  return Clamp0(v);
}

double ThetaLowerSibson(int m, int n, double d, double alpha, double theta) {
  const double denom = 0.5 * (1.0 - theta) * (n + 1) * m + theta;
  const double v =
      (alpha - n) / (alpha - 1.0) * std::log(static_cast<double>(m)) +
      alpha / (alpha - 1.0) * LogOrNegInf((1.0 - d / n) / denom);
  return Clamp0(v);
}

double ThetaLowerMutualInfo(int m, int n, double d, double theta, double eta) {
  const double slack = n * theta - d;
  if (!(slack > 0.0)) return 0.0;
  const double v = -theta * std::log(eta) +
                   theta * n * std::log(1.0 - d / (n * theta)) +
                   theta * d * std::log(d / ((m - 1.0) * slack));
  return Clamp0(v);
}

BoundPair GlobalBounds(const PrivacyNotion& notion, const SourceSet& source_set,
                       const ProductSpace& space, double distortion) {
  if (!(source_set.space() == space)) {
    throw std::invalid_argument("source set and space disagree");
  }
  const int m = space.m();
  const int n = space.n();
  const double d = distortion;
  if (!(d > 0.0) || d > n) {
    throw std::invalid_argument("distortion budget must lie in (0, n]");
  }

  BoundPair out;
  if (d >= static_cast<double>(n) * (m - 1) / m) {
    out.exact = true;
    return out;  // the uniform mechanism is already valid
  }

  const bool class1 = source_set.class_tag() == SourceClass::kClassI;
  const double theta = class1 ? 1.0 : source_set.theta_star();
  const double eta =
      class1 ? std::pow(static_cast<double>(m), -n) : source_set.eta();

  switch (notion.kind()) {
    case NotionKind::kDp:
      out.lower = ThetaLowerDp(m, n, d, theta);
      out.upper = WangLossDp(m, n, d);
      break;
    case NotionKind::kApproxDp: {
      const double delta = notion.delta();
      out.lower = ThetaLowerApproxDp(m, n, d, delta, theta);
      out.upper = WangLossApproxDp(m, n, d, delta);
      if (out.lower == 0.0 &&
          theta * n * (1.0 - delta * std::pow(m, n - 1)) <= d) {
        out.note = "vacuous-lower";
      }
      break;
    }
    case NotionKind::kMaxInfo: {
      out.lower = ThetaLowerMaxInfo(m, n, d, theta);
      if (source_set.is_full_simplex()) {
        out.upper = WangLossMaxInfoMember(space, d, Prior::Uniform(space));
      } else {
        double worst = 0.0;
        for (const Prior& member : source_set.members()) {
          worst = std::max(worst, WangLossMaxInfoMember(space, d, member));
        }
        out.upper = worst;
      }
      break;
    }
    case NotionKind::kMaxLeakage:
      out.lower = ThetaLowerMaxLeakage(m, n, d, theta);
      out.upper = WangLossMaxLeakage(m, n, d);
      break;
    case NotionKind::kRenyiDp:
      out.lower = ThetaLowerRenyiDp(m, n, d, notion.alpha(), theta);
      out.upper = WangLossRenyiDp(m, n, d, notion.alpha());
      break;
    case NotionKind::kSibsonMi:
      out.lower = ThetaLowerSibson(m, n, d, notion.alpha(), theta);
      if (class1) {
        // In Class I the exact mutual-information value also floors Sibson.
        out.lower = std::max(out.lower, WangLossMutualInfoUniform(m, n, d));
      }
      out.upper = WangLossSibsonUniform(m, n, d, notion.alpha());
      break;
    case NotionKind::kMutualInfo:
      out.lower = ThetaLowerMutualInfo(m, n, d, theta, eta);
      out.upper = WangLossMutualInfoUniform(m, n, d);
      break;
  }

  out.lower = std::min(out.lower, out.upper);
  out.exact = std::abs(out.upper - out.lower) <= 1e-12;
  return out;
}

}  // namespace putlab
