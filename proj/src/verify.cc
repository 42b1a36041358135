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

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "putlab/global_bounds.h"
#include "putlab/local_bounds.h"
#include "putlab/mechanism_catalog.h"
#include "putlab/oracles.h"
#include "putlab/privacy_loss.h"
#include "putlab/rng.h"

namespace putlab {

Prior RandomSortedPrior(std::mt19937_64& rng, int m, double floor) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> raw(m);
  double sum = 0.0;
  for (double& v : raw) {
    v = expo(rng);
    sum += v;
  }
  for (double& v : raw) {
    v = (1.0 - floor) * v / sum + floor / m;
  }
  std::sort(raw.begin(), raw.end(), std::greater<double>());
  return Prior(ProductSpace(m, 1), std::move(raw));
}

Mechanism RandomMechanism(std::mt19937_64& rng, const ProductSpace& space) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<std::vector<double>> rows(space.size(),
                                        std::vector<double>(space.size()));
  for (auto& row : rows) {
    double sum = 0.0;
    for (double& v : row) {
      v = expo(rng) + 0.05;
      sum += v;
    }
    for (double& v : row) v /= sum;
  }
  return Mechanism(space, std::move(rows));
}

bool VerifyReport::AllPass() const {
  for (const VerifyEntry& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

nlohmann::json VerifyReport::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const VerifyEntry& e : entries) {
    out.push_back({{"notion", e.notion},
                   {"theorem", e.target},
                   {"max_dev", e.max_dev},
                   {"worst_case", e.worst_case},
                   {"pass", e.pass}});
  }
  return out;
}

namespace {

struct Accumulator {
  std::string notion;
  double threshold;
  double max_dev = 0.0;
  nlohmann::json worst_case;

  void Offer(double dev, nlohmann::json context) {
    if (dev > max_dev) {
      max_dev = dev;
      worst_case = std::move(context);
    }
  }
};

nlohmann::json Context(int trial, const Prior& prior, double d) {
  return nlohmann::json{
      {"trial", trial}, {"prior", prior.probs()}, {"D", d}};
}

double BracketExcess(double value, const BoundPair& bounds) {
  return std::max({0.0, bounds.lower - value, value - bounds.upper});
}

}  // namespace

VerifyReport VerifyClosedForms(std::uint64_t seed, int trials,
                               const std::string& only) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");

  std::map<std::string, Accumulator> acc;
  auto want = [&](const std::string& target) {
    return only.empty() || target.find(only) != std::string::npos;
  };
  auto slot = [&](const std::string& target, const std::string& notion,
                  double threshold) -> Accumulator& {
    auto it = acc.find(target);
    if (it == acc.end()) {
      it = acc.emplace(target, Accumulator{notion, threshold, 0.0, {}}).first;
    }
    return it->second;
  };

  const std::vector<double> d_grid = {0.05, 0.15, 0.3, 0.5, 0.7, 0.9};
  const std::vector<double> deltas = {0.05, 0.1, 0.3};
  constexpr double kLpTol = 1e-6;

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(SubSeed(seed, trial));
    const int m = 2 + trial % 4;
    const Prior prior = RandomSortedPrior(rng, m);
    const std::vector<double> tails = CumulativeTails(prior);

    if (want("dp_known_prior")) {
      Accumulator& a = slot("dp_known_prior", "dp", 1e-5);
      for (double d : d_grid) {
        const double closed = DpKnownPrior(prior, d);
        const double oracle =
            OraclePdLp(PrivacyNotion::Dp(), prior, d, kLpTol).value;
        a.Offer(std::abs(closed - oracle), Context(trial, prior, d));
      }
    }
    if (want("adp_known_prior")) {
      Accumulator& a = slot("adp_known_prior", "adp", 1e-5);
      for (double delta : deltas) {
        for (double d : d_grid) {
          const double closed = AdpKnownPrior(prior, d, delta);
          const double oracle =
              OraclePdLp(PrivacyNotion::ApproxDp(delta), prior, d, kLpTol)
                  .value;
          nlohmann::json ctx = Context(trial, prior, d);
          ctx["delta"] = delta;
          a.Offer(std::abs(closed - oracle), std::move(ctx));
        }
      }
    }
    if (want("ml_known_prior")) {
      Accumulator& a = slot("ml_known_prior", "ml", 1e-5);
      for (double d : d_grid) {
        const double closed = MlKnownPrior(prior, d);
        const double oracle =
            OraclePdLp(PrivacyNotion::MaxLeakage(), prior, d, kLpTol).value;
        a.Offer(std::abs(closed - oracle), Context(trial, prior, d));
      }
    }
    if (want("maxinfo_theta_bracket")) {
      Accumulator& a = slot("maxinfo_theta_bracket", "maxinfo", 1e-6);
      const SourceSet set = SourceSet::Singleton(prior);
      for (double d : {0.1, 0.3}) {
        const BoundPair bounds =
            GlobalBounds(PrivacyNotion::MaxInfo(), set, prior.space(), d);
        const double oracle =
            OraclePdLp(PrivacyNotion::MaxInfo(), prior, d, kLpTol).value;
        a.Offer(BracketExcess(oracle, bounds), Context(trial, prior, d));
      }
    }

    // Class I closed forms at the uniform prior.
    {
      const Prior uniform = Prior::Uniform(prior.space());
      const SourceSet set = SourceSet::Singleton(uniform);
      const std::vector<double> class1_grid = {0.08, 0.3, 0.55};
      if (want("class1_dp")) {
        Accumulator& a = slot("class1_dp", "dp", 1e-5);
        for (double d : class1_grid) {
          const double closed =
              Class1Pd(PrivacyNotion::Dp(), m, d, set).lower;
          const double oracle =
              OraclePdLp(PrivacyNotion::Dp(), uniform, d, kLpTol).value;
          a.Offer(std::abs(closed - oracle), Context(trial, uniform, d));
        }
      }
      if (want("class1_ml")) {
        Accumulator& a = slot("class1_ml", "ml", 1e-5);
        for (double d : class1_grid) {
          const double closed =
              Class1Pd(PrivacyNotion::MaxLeakage(), m, d, set).lower;
          const double oracle =
              OraclePdLp(PrivacyNotion::MaxLeakage(), uniform, d, kLpTol)
                  .value;
          a.Offer(std::abs(closed - oracle), Context(trial, uniform, d));
        }
      }
      if (m <= 4 && want("class1_mi")) {
        Accumulator& a = slot("class1_mi", "mi", 1e-4);
        for (double d : class1_grid) {
          const double closed =
              Class1Pd(PrivacyNotion::MutualInfo(), m, d, set).lower;
          const double oracle =
              OraclePdConvex(PrivacyNotion::MutualInfo(), uniform, d, 1e-6)
                  .value;
          a.Offer(std::abs(closed - oracle), Context(trial, uniform, d));
        }
      }
      if (m <= 3 && trial % 3 == 0 &&
          (want("class1_sibson_bracket") || want("class1_rdp_bracket"))) {
        const double d = 0.25;
        if (want("class1_sibson_bracket")) {
          Accumulator& a = slot("class1_sibson_bracket", "sibson", 1e-6);
          const BoundPair bounds =
              Class1Pd(PrivacyNotion::SibsonMi(2.0), m, d, set);
          const double oracle = OraclePdConvex(PrivacyNotion::SibsonMi(2.0),
                                               uniform, d, 1e-6, seed)
                                    .value;
          a.Offer(BracketExcess(oracle, bounds), Context(trial, uniform, d));
        }
        if (want("class1_rdp_bracket")) {
          Accumulator& a = slot("class1_rdp_bracket", "rdp", 1e-6);
          const BoundPair bounds =
              Class1Pd(PrivacyNotion::RenyiDp(2.0), m, d, set);
          const double oracle = OraclePdConvex(PrivacyNotion::RenyiDp(2.0),
                                               uniform, d, 1e-6, seed)
                                    .value;
          a.Offer(BracketExcess(oracle, bounds), Context(trial, uniform, d));
        }
      }
    }

    // Optimal mechanism constructions.
    if (want("optimal_adp_mechanism")) {
      Accumulator& a = slot("optimal_adp_mechanism", "adp", 1e-6);
      const double delta = 0.1;
      const double d = 0.5 * (1.0 - delta) * tails[m - 1];
      const Mechanism q = OptimalAdpMechanism(prior, d, delta);
      const double loss = EvalLoss(PrivacyNotion::ApproxDp(delta), q);
      const double closed = AdpKnownPrior(prior, d, delta);
      const double excess =
          std::max(0.0, ExpectedDistortion(q, prior) - d);
      nlohmann::json ctx = Context(trial, prior, d);
      ctx["delta"] = delta;
      a.Offer(std::max(std::abs(loss - closed), excess), std::move(ctx));
    }
    if (want("optimal_ml_mechanism")) {
      Accumulator& a = slot("optimal_ml_mechanism", "ml", 1e-6);
      const double d = 0.5 * tails[m - 1];
      const Mechanism q = OptimalMlMechanism(prior, d);
      const double loss = EvalLoss(PrivacyNotion::MaxLeakage(), q);
      const double closed = MlKnownPrior(prior, d);
      const double excess =
          std::max(0.0, ExpectedDistortion(q, prior) - d);
      a.Offer(std::max(std::abs(loss - closed), excess),
              Context(trial, prior, d));
    }

    // Class II finite families.
    if (trial % 3 == 1 && want("adp_class2_family")) {
      Accumulator& a = slot("adp_class2_family", "adp", 1e-5);
      const Prior second = RandomSortedPrior(rng, m);
      const SourceSet family = SourceSet::FiniteFamily({prior, second});
      if (family.class_tag() == SourceClass::kClassII) {
        const double delta = 0.1;
        const double zero_at = (1.0 - delta) *
                               std::max(tails[m - 1],
                                        CumulativeTails(second)[m - 1]);
        const double d = 0.4 * zero_at;
        const double closed = AdpSourceSetClass2(family, d, delta);
        const double oracle =
            OraclePdLpMulti(PrivacyNotion::ApproxDp(delta), {prior, second},
                            d, kLpTol)
                .value;
        nlohmann::json ctx = Context(trial, prior, d);
        ctx["second_prior"] = second.probs();
        ctx["delta"] = delta;
        a.Offer(std::abs(closed - oracle), std::move(ctx));
      }
    }

    if (want("ml_distortion_roundtrip")) {
      Accumulator& a = slot("ml_distortion_roundtrip", "ml", 1e-9);
      const SourceSet set = SourceSet::Singleton(prior);
      for (double eps = 0.0; eps < std::log(static_cast<double>(m)) - 0.01;
           eps += 0.2) {
        const double d = MlDistortionFromLeakage(set, eps);
        const double back = MlKnownPrior(prior, d);
        nlohmann::json ctx = Context(trial, prior, d);
        ctx["eps"] = eps;
        a.Offer(std::abs(back - eps), std::move(ctx));
      }
    }
  }

  VerifyReport report;
  for (auto& [target, a] : acc) {
    VerifyEntry entry;
    entry.notion = a.notion;
    entry.target = target;
    entry.max_dev = a.max_dev;
    entry.worst_case = a.worst_case;
    entry.pass = a.max_dev <= a.threshold;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace putlab
