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

#include "putlab/composition.h"

#include <cmath>
#include <stdexcept>

#include "putlab/global_bounds.h"
#include "putlab/local_bounds.h"
#include "putlab/privacy_loss.h"

namespace putlab {

namespace {

void RequireOneCoordinate(const Mechanism& base) {
  if (base.space_in().n() != 1 || !base.IsSquare()) {
    throw std::invalid_argument("composition takes a square (m, 1) base");
  }
}

bool ProductFitsCap(int m, int n) {
  std::int64_t size = 1;
  const std::int64_t cap = EnumerationCap();
  for (int i = 0; i < n; ++i) {
    if (size > cap / m) return false;
    size *= m;
  }
  return true;
}

}  // namespace

ProductMechanism Compose(const Mechanism& base, int n) {
  RequireOneCoordinate(base);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const int m = base.space_in().m();
  ProductMechanism out{base, n, std::nullopt};
  if (!ProductFitsCap(m, n)) return out;  // laws still apply analytically

  ProductSpace space(m, n);
  std::vector<std::vector<double>> rows(
      space.size(), std::vector<double>(space.size(), 1.0));
  for (std::int64_t x = 0; x < space.size(); ++x) {
    for (std::int64_t y = 0; y < space.size(); ++y) {
      double v = 1.0;
      for (int pos = 0; pos < n; ++pos) {
        v *= base(space.Digit(x, pos), space.Digit(y, pos));
      }
      rows[x][y] = v;
    }
  }
  out.realized = Mechanism(space, std::move(rows));
  return out;
}

Prior ProductPrior(const Prior& base, int n) {
  if (base.space().n() != 1) {
    throw std::invalid_argument("product prior takes a one-coordinate base");
  }
  const int m = base.space().m();
  ProductSpace space(m, n);
  std::vector<double> probs(space.size(), 1.0);
  for (std::int64_t x = 0; x < space.size(); ++x) {
    for (int pos = 0; pos < n; ++pos) probs[x] *= base[space.Digit(x, pos)];
  }
  return Prior(space, std::move(probs));
}

double ComposedLossLaw(const PrivacyNotion& notion, const Mechanism& base,
                       const Prior* base_prior, int n) {
  RequireOneCoordinate(base);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (notion.kind() == NotionKind::kApproxDp) {
    throw std::invalid_argument(
        "approximate DP has no composition law, only a sandwich; evaluate the "
        "realized product directly");
  }
  if (notion.prior_required() && base_prior == nullptr) {
    throw std::invalid_argument("the notion \"" + notion.Label() +
                                "\" needs a prior");
  }

  const double per_coordinate = EvalLoss(notion, base, base_prior);
  double law = per_coordinate;
  if (notion.kind() != NotionKind::kDp &&
      notion.kind() != NotionKind::kRenyiDp) {
    law = n * per_coordinate;
  }

  if (ProductFitsCap(base.space_in().m(), n)) {
    const ProductMechanism product = Compose(base, n);
    double direct;
    if (notion.prior_required()) {
      const Prior joint = ProductPrior(*base_prior, n);
      direct = EvalLoss(notion, *product.realized, joint);
    } else {
      direct = EvalLoss(notion, *product.realized);
    }
    const bool both_infinite = std::isinf(law) && std::isinf(direct);
    if (!both_infinite && std::abs(direct - law) > 1e-9) {
      throw std::logic_error("composition law and realized product disagree");
    }
  }
  return law;
}

BoundPair ComposedPd(const PrivacyNotion& notion, int m, int n,
                     double total_distortion, const SourceSet& source_set) {
  if (source_set.space().n() != 1 || source_set.space().m() != m) {
    throw std::invalid_argument("source set must live on {1..m}, n = 1");
  }
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double total = total_distortion;
  if (!(total > 0.0) || total > n) {
    throw std::invalid_argument("total distortion must lie in (0, n]");
  }
  const double per = total / n;  // the one-coordinate trade-off governs D/n

  if (source_set.class_tag() == SourceClass::kClassI) {
    BoundPair out;
    if (per >= (m - 1.0) / m) {
      out.exact = true;
      return out;
    }
    switch (notion.kind()) {
      case NotionKind::kDp:
      case NotionKind::kRenyiDp:
        // Invariant under parallel composition.
        return Class1Pd(notion, m, per, source_set);
      case NotionKind::kMaxInfo:
      case NotionKind::kMaxLeakage:
      case NotionKind::kSibsonMi:
      case NotionKind::kMutualInfo: {
        // Additive under parallel composition.
        out = Class1Pd(notion, m, per, source_set);
        out.lower *= n;
        out.upper *= n;
        return out;
      }
      case NotionKind::kApproxDp: {
        // Only a sandwich survives composition: the product behaves at least
        // as well as delta at one coordinate and no worse than delta m^(n-1).
        const double blown = notion.delta() * std::pow(m, n - 1);
        out.lower = ThetaLowerApproxDp(m, n, total, notion.delta(), 1.0);
        if (blown >= 1.0) out.note = "vacuous-lower";
        out.upper = WangLossApproxDp(m, n, total, notion.delta());
        out.lower = std::min(out.lower, out.upper);
        out.exact = std::abs(out.upper - out.lower) <= 1e-12;
        return out;
      }
    }
  }

  if (source_set.is_singleton()) {
    const Prior& prior = source_set.members()[0];
    if (!prior.IsSortedNonIncreasing()) {
      throw std::invalid_argument(
          "known-prior composition needs a sorted prior");
    }
    BoundPair out;
    out.exact = true;
    switch (notion.kind()) {
      case NotionKind::kApproxDp:
        out.lower = out.upper = AdpKnownPrior(prior, per, notion.delta());
        return out;
      case NotionKind::kMaxLeakage:
        out.lower = out.upper = n * MlKnownPrior(prior, per);
        return out;
      default:
        throw std::invalid_argument(
            "known-prior composition covers approximate DP and maximal "
            "leakage only");
    }
  }
  throw std::invalid_argument(
      "composed trade-off needs a Class I set or a sorted singleton");
}

}  // namespace putlab
