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

#include "putlab/privacy_loss.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace putlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log sum exp over running terms; -inf terms contribute nothing.
class LogSumExp {
 public:
  void Add(double log_term) {
    if (log_term == -kInf) return;
    terms_.push_back(log_term);
  }
  double Value() const {
    if (terms_.empty()) return -kInf;
    const double peak = *std::max_element(terms_.begin(), terms_.end());
    if (peak == kInf) return kInf;
    double sum = 0.0;
    for (double t : terms_) sum += std::exp(t - peak);
    return peak + std::log(sum);
  }

 private:
  std::vector<double> terms_;
};

double MaxDivergence(const Mechanism& q) {
  double worst = 0.0;  // outputs with matching zeros count as ratio one
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    for (std::int64_t xp : q.space_in().Neighbors(x)) {
      for (std::int64_t y = 0; y < q.size_out(); ++y) {
        const double a = q(x, y);
        const double b = q(xp, y);
        if (a <= 0.0) continue;
        if (b <= 0.0) return kInf;
        worst = std::max(worst, std::log(a / b));
      }
    }
  }
  return worst;
}

double ApproxMaxDivergence(const Mechanism& q, double delta) {
  double worst = 0.0;  // outer max with zero
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    for (std::int64_t xp : q.space_in().Neighbors(x)) {
      for (std::int64_t y = 0; y < q.size_out(); ++y) {
        const double num = q(x, y) - delta;
        if (num <= 0.0) continue;
        const double b = q(xp, y);
        if (b <= 0.0) return kInf;
        worst = std::max(worst, std::log(num / b));
      }
    }
  }
  return worst;
}

std::vector<double> OutputMarginal(const Mechanism& q, const Prior& p) {
  std::vector<double> marg(q.size_out(), 0.0);
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    const double px = p[x];
    for (std::int64_t y = 0; y < q.size_out(); ++y) {
      marg[y] += px * q(x, y);
    }
  }
  return marg;
}

double MaxInformation(const Mechanism& q, const Prior& p) {
  const std::vector<double> marg = OutputMarginal(q, p);
  double worst = 0.0;  // max_x Q(y|x) >= marginal, so the loss is >= 0
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    for (std::int64_t y = 0; y < q.size_out(); ++y) {
      const double a = q(x, y);
      if (a <= 0.0) continue;
      // Full support keeps the marginal positive wherever some Q(y|x) > 0.
      worst = std::max(worst, std::log(a / marg[y]));
    }
  }
  return worst;
}

double MaximalLeakage(const Mechanism& q) {
  double sum = 0.0;
  for (std::int64_t y = 0; y < q.size_out(); ++y) {
    double peak = 0.0;
    for (std::int64_t x = 0; x < q.size_in(); ++x) {
      peak = std::max(peak, q(x, y));
    }
    sum += peak;
  }
  return std::log(sum);
}

// Renyi divergence of order alpha between rows x and x'.
double RenyiBetweenRows(const Mechanism& q, std::int64_t x, std::int64_t xp,
                        double alpha) {
  LogSumExp lse;
  for (std::int64_t y = 0; y < q.size_out(); ++y) {
    const double a = q(x, y);
    const double b = q(xp, y);
    if (a <= 0.0) continue;  // zero^alpha kills the term
    if (b <= 0.0) return kInf;
    lse.Add(alpha * std::log(a) + (1.0 - alpha) * std::log(b));
  }
  const double v = lse.Value();
  if (v == kInf) return kInf;
  return v / (alpha - 1.0);
}

double RenyiDpLoss(const Mechanism& q, double alpha) {
  double worst = 0.0;
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    for (std::int64_t xp : q.space_in().Neighbors(x)) {
      const double v = RenyiBetweenRows(q, x, xp, alpha);
      if (v == kInf) return kInf;
      worst = std::max(worst, v);
    }
  }
  return worst;
}

double SibsonMiLoss(const Mechanism& q, const Prior& p, double alpha) {
  if (alpha < 1.0 + 1e-9) {
    throw std::invalid_argument(
        "Sibson evaluation below alpha = 1 + 1e-9 is refused; use the mutual "
        "information for the limit");
  }
  LogSumExp outer;
  for (std::int64_t y = 0; y < q.size_out(); ++y) {
    LogSumExp inner;
    for (std::int64_t x = 0; x < q.size_in(); ++x) {
      const double a = q(x, y);
      if (a <= 0.0) continue;
      inner.Add(std::log(p[x]) + alpha * std::log(a));
    }
    const double iv = inner.Value();
    if (iv == -kInf) continue;  // all-zero column
    outer.Add(iv / alpha);
  }
  return alpha / (alpha - 1.0) * outer.Value();
}

double MutualInformation(const Mechanism& q, const Prior& p) {
  const std::vector<double> marg = OutputMarginal(q, p);
  // Compensated summation: the terms have mixed signs and the total can sit
  // many orders below them.
  double sum = 0.0;
  double carry = 0.0;
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    for (std::int64_t y = 0; y < q.size_out(); ++y) {
      const double a = q(x, y);
      if (a <= 0.0) continue;  // 0 log 0 = 0
      const double term = p[x] * a * std::log(a / marg[y]);
      const double t = sum + term;
      if (std::abs(sum) >= std::abs(term)) {
        carry += (sum - t) + term;
      } else {
        carry += (term - t) + sum;
      }
      sum = t;
    }
  }
  sum += carry;
  if (sum < 0.0) {
    if (sum < -1e-9) {
      throw std::logic_error("mutual information went negative");
    }
    sum = 0.0;
  }
  return sum;
}

}  // namespace

std::string PrivacyNotion::Label() const {
  std::ostringstream out;
  switch (kind_) {
    case NotionKind::kDp:
      return "dp";
    case NotionKind::kApproxDp:
      out << "adp(" << delta_ << ")";
      return out.str();
    case NotionKind::kMaxInfo:
      return "maxinfo";
    case NotionKind::kMaxLeakage:
      return "ml";
    case NotionKind::kRenyiDp:
      out << "rdp(" << alpha_ << ")";
      return out.str();
    case NotionKind::kSibsonMi:
      out << "sibson(" << alpha_ << ")";
      return out.str();
    case NotionKind::kMutualInfo:
      return "mi";
  }
  return "unknown";
}

LossValue EvalLoss(const PrivacyNotion& notion, const Mechanism& q,
                   const Prior* prior) {
  if (notion.prior_required()) {
    if (prior == nullptr) {
      throw std::invalid_argument("the notion \"" + notion.Label() +
                                  "\" needs a prior");
    }
    if (!(prior->space() == q.space_in())) {
      throw std::invalid_argument("prior and mechanism spaces differ");
    }
  }
  switch (notion.kind()) {
    case NotionKind::kDp:
      return MaxDivergence(q);
    case NotionKind::kApproxDp:
      return ApproxMaxDivergence(q, notion.delta());
    case NotionKind::kMaxInfo:
      return MaxInformation(q, *prior);
    case NotionKind::kMaxLeakage:
      return MaximalLeakage(q);
    case NotionKind::kRenyiDp:
      return RenyiDpLoss(q, notion.alpha());
    case NotionKind::kSibsonMi:
      return SibsonMiLoss(q, *prior, notion.alpha());
    case NotionKind::kMutualInfo:
      return MutualInformation(q, *prior);
  }
  throw std::logic_error("unhandled notion");
}

LossValue EvalLoss(const PrivacyNotion& notion, const Mechanism& q,
                   const Prior& prior) {
  return EvalLoss(notion, q, &prior);
}

bool RelationReport::AllPass() const {
  for (const RelationCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

RelationCheck MakeCheck(const std::string& name, bool pass, double lhs,
                        double rhs) {
  RelationCheck c{name, pass, ""};
  if (!pass) {
    std::ostringstream out;
    out << "lhs=" << lhs << " rhs=" << rhs;
    c.detail = out.str();
  }
  return c;
}

}  // namespace

RelationReport CheckRelations(const Mechanism& q, const Prior& prior,
                              const std::vector<double>& alpha_grid) {
  for (size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 1.0) ||
        (i > 0 && alpha_grid[i] <= alpha_grid[i - 1])) {
      throw std::invalid_argument(
          "alpha grid must be strictly increasing with entries > 1");
    }
  }
  constexpr double kSlack = 1e-9;
  RelationReport report;

  const double dp = EvalLoss(PrivacyNotion::Dp(), q);
  const double mi = EvalLoss(PrivacyNotion::MutualInfo(), q, prior);

  // Approximate DP non-increasing in delta, starting from plain DP.
  {
    const std::vector<double> deltas = {0.01, 0.05, 0.1, 0.2, 0.4};
    double previous = dp;
    bool pass = true;
    double bad_lhs = 0, bad_rhs = 0;
    for (double d : deltas) {
      const double v = EvalLoss(PrivacyNotion::ApproxDp(d), q);
      if (v > previous + kSlack) {
        pass = false;
        bad_lhs = v;
        bad_rhs = previous;
        break;
      }
      previous = v;
    }
    report.checks.push_back(
        MakeCheck("adp-nonincreasing-in-delta", pass, bad_lhs, bad_rhs));
  }

  // Renyi: monotone in alpha, below DP.
  {
    double previous = 0.0;
    bool monotone = true, below = true;
    double lhs = 0, rhs = 0;
    for (size_t i = 0; i < alpha_grid.size(); ++i) {
      const double v = EvalLoss(PrivacyNotion::RenyiDp(alpha_grid[i]), q);
      if (i > 0 && v < previous - kSlack) {
        monotone = false;
        lhs = v;
        rhs = previous;
      }
      if (v > dp + kSlack) {
        below = false;
        lhs = v;
        rhs = dp;
      }
      previous = v;
    }
    report.checks.push_back(
        MakeCheck("rdp-nondecreasing-in-alpha", monotone, lhs, rhs));
    report.checks.push_back(MakeCheck("rdp-at-most-dp", below, lhs, rhs));
  }

  // Sibson: monotone in alpha, between the mutual information and DP.
  {
    double previous = 0.0;
    bool monotone = true, above = true, below = true;
    double lhs = 0, rhs = 0;
    for (size_t i = 0; i < alpha_grid.size(); ++i) {
      const double v =
          EvalLoss(PrivacyNotion::SibsonMi(alpha_grid[i]), q, prior);
      if (i > 0 && v < previous - kSlack) {
        monotone = false;
        lhs = v;
        rhs = previous;
      }
      if (v < mi - kSlack) {
        above = false;
        lhs = v;
        rhs = mi;
      }
      if (v > dp + kSlack) {
        below = false;
        lhs = v;
        rhs = dp;
      }
      previous = v;
    }
    report.checks.push_back(
        MakeCheck("sibson-nondecreasing-in-alpha", monotone, lhs, rhs));
    report.checks.push_back(MakeCheck("sibson-at-least-mi", above, lhs, rhs));
    report.checks.push_back(MakeCheck("sibson-at-most-dp", below, lhs, rhs));
  }

  // Numeric limits, meaningful only when DP is finite.
  if (std::isfinite(dp)) {
    const double rdp_tail = EvalLoss(PrivacyNotion::RenyiDp(1e4), q);
    report.checks.push_back(MakeCheck("rdp-limit-matches-dp",
                                      std::abs(rdp_tail - dp) < 1e-3, rdp_tail,
                                      dp));
    const double sibson_head =
        EvalLoss(PrivacyNotion::SibsonMi(1.0 + 1e-6), q, prior);
    report.checks.push_back(MakeCheck("sibson-limit-matches-mi",
                                      std::abs(sibson_head - mi) < 1e-3,
                                      sibson_head, mi));
    const double ml = EvalLoss(PrivacyNotion::MaxLeakage(), q);
    const double sibson_tail =
        EvalLoss(PrivacyNotion::SibsonMi(1e4), q, prior);
    report.checks.push_back(MakeCheck("sibson-limit-matches-ml",
                                      std::abs(sibson_tail - ml) < 1e-3,
                                      sibson_tail, ml));
  }

  return report;
}

}  // namespace putlab
