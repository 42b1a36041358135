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

#ifndef PUTLAB_ORACLES_H_
#define PUTLAB_ORACLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "putlab/mechanism.h"
#include "putlab/privacy_notion.h"
#include "putlab/prior.h"

namespace putlab {

// Brute-force optimization over explicit mechanisms. These oracles share no
// algebra with the closed forms they certify: they minimize the loss
// functionals directly over the valid polytope.
struct OracleResult {
  double value = 0.0;
  Mechanism certificate;
  int iterations = 0;
  double tolerance_achieved = 0.0;
  // Cleared when independent restarts of the convex oracle disagree beyond
  // ten times the requested tolerance.
  bool certified = true;
};

// One-coordinate trade-off for the linear-programming notions at m <= 6.
// Maximal leakage is a single LP over the mechanism entries plus per-column
// maximum variables. DP, approximate DP, and max-information bisect on eps
// over [0, log((m-1)(1-D)/D) + 1] with an LP feasibility test at each step
// (all three constraint families are linear in Q at fixed eps); the bracket
// shrinks below tol (>= 1e-8). The certificate is the last feasible point.
OracleResult OraclePdLp(const PrivacyNotion& notion, const Prior& prior,
                        double distortion, double tol);

// Same, with the validity constraint enforced for every prior in the list
// (used for finite-family source sets).
OracleResult OraclePdLpMulti(const PrivacyNotion& notion,
                             const std::vector<Prior>& priors,
                             double distortion, double tol);

// One-coordinate trade-off for the convex notions at m <= 4. Mutual
// information runs a Blahut-Arimoto iteration inside a sweep of the
// distortion multiplier; Sibson and Renyi run projected gradient descent on
// their convex surrogates from 16 seeded random restarts, projecting onto
// the valid polytope with Dykstra alternation.
OracleResult OraclePdConvex(const PrivacyNotion& notion, const Prior& prior,
                            double distortion, double tol,
                            std::uint64_t seed = 1);

struct VerifyEntry {
  std::string notion;
  std::string target;  // which closed form or bracket was checked
  double max_dev = 0.0;
  nlohmann::json worst_case;
  bool pass = true;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool AllPass() const;
  nlohmann::json ToJson() const;
};

// Samples seeded random sorted priors (m in {2..5}) and distortion grids,
// runs the oracles against every closed form and bracket this library
// exposes, and reports the worst absolute deviation per (notion, target)
// pair. `only` restricts the run to targets whose name contains it.
VerifyReport VerifyClosedForms(std::uint64_t seed, int trials,
                               const std::string& only = "");

}  // namespace putlab

#endif  // PUTLAB_ORACLES_H_
