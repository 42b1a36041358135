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

#ifndef PUTLAB_PRIVACY_LOSS_H_
#define PUTLAB_PRIVACY_LOSS_H_

#include <string>
#include <vector>

#include "putlab/mechanism.h"
#include "putlab/privacy_notion.h"
#include "putlab/prior.h"

namespace putlab {

// Non-negative privacy loss in nats; +infinity when a zero-probability
// neighbor output breaks a divergence-type guarantee outright.
using LossValue = double;

// Evaluates the requested loss functional on an explicit mechanism, over the
// Hamming-neighbor structure of its input space. A prior is required exactly
// when notion.prior_required(); passing one to a prior-free notion is
// harmless and ignored.
//
// Conventions for zero probabilities:
//  - DP: outputs with Q(y|x) = Q(y|x') = 0 contribute ratio one;
//    Q(y|x) > 0 = Q(y|x') yields +infinity.
//  - Approximate DP: numerators Q(y|x) - delta <= 0 are skipped; a positive
//    numerator over a zero denominator yields +infinity.
//  - Renyi: both-zero terms contribute nothing; Q(y|x) > 0 = Q(y|x') yields
//    +infinity.
//  - Mutual information: 0 log 0 = 0.
// Sibson evaluation below alpha = 1 + 1e-9 is refused (catastrophic
// cancellation); the alpha -> 1 limit is served by the mutual information.
LossValue EvalLoss(const PrivacyNotion& notion, const Mechanism& q,
                   const Prior* prior = nullptr);
LossValue EvalLoss(const PrivacyNotion& notion, const Mechanism& q,
                   const Prior& prior);

struct RelationCheck {
  std::string name;
  bool pass;
  std::string detail;  // filled on failure
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool AllPass() const;
};

// Exercises the order and limit relations between the loss functionals on
// one mechanism: approximate DP non-increasing in delta; Renyi non-decreasing
// in alpha and at most DP; Sibson non-decreasing in alpha, at least the
// mutual information and at most DP; and, when DP is finite, the large-alpha
// Renyi limit against DP and the alpha -> 1 Sibson limit against the mutual
// information, both within 1e-3. alpha_grid must be strictly increasing with
// every entry > 1.
RelationReport CheckRelations(const Mechanism& q, const Prior& prior,
                              const std::vector<double>& alpha_grid);

}  // namespace putlab

#endif  // PUTLAB_PRIVACY_LOSS_H_
