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

#ifndef PUTLAB_MECHANISM_CATALOG_H_
#define PUTLAB_MECHANISM_CATALOG_H_

#include "putlab/mechanism.h"
#include "putlab/prior.h"
#include "putlab/product_space.h"

namespace putlab {

// Every entry equal to m^-n. Zero loss under every notion; valid only when
// the distortion budget is at least n(m-1)/m.
Mechanism UniformMechanism(const ProductSpace& space);

// Q(x|x) = 1. Zero distortion, infinite divergence-type loss.
Mechanism IdentityMechanism(const ProductSpace& space);

// The distance-exponential mechanism
//   Q(y|x) = (1 - D/n)^n * ((m-1)(n-D)/D)^{-d(x,y)},
// whose expected distortion is exactly D under every prior. The universal
// upper-bound achiever for the global trade-off; the binary n=1 case is
// classic randomized response. Permitted for 0 < D <= n, though beyond
// n(m-1)/m the uniform mechanism already dominates it.
Mechanism WangMechanism(const ProductSpace& space, double distortion);

// The m x m one-coordinate mechanism with first column 1 resp. 1-delta and
// delta on the diagonal below the first row. Its approximate-DP loss at this
// delta is zero while its distortion under a sorted prior is
// (1-delta)(1-P_1).
Mechanism QDeltaMechanism(int m, double delta);

// Optimal one-coordinate mechanism for approximate DP at a known sorted
// prior: sweeps the leading diagonal entry over [1-D, 1] with an inner LP
// over the remaining diagonals, then fills off-diagonals proportionally.
// The result is (P,D)-valid, achieves AdpKnownPrior(P,D,delta) within 1e-6,
// and its diagonal satisfies Q(j|j) = e^eps Q(j|1) + delta for j >= 2.
// Requires P sorted non-increasing and 0 < D < (1-delta)(1-P_1).
Mechanism OptimalAdpMechanism(const Prior& sorted_prior, double distortion,
                              double delta);

// Optimal one-coordinate mechanism for maximal leakage at a known sorted
// prior: solves the diagonal LP (minimize the column-maximum sum subject to
// validity and ordering) and fills off-diagonals so rows are stochastic and
// every column's maximum sits on the diagonal. Achieves
// MlKnownPrior(P,D) with distortion at most D. Requires P sorted
// non-increasing and 0 < D < 1 - P_1.
Mechanism OptimalMlMechanism(const Prior& sorted_prior, double distortion);

// Row-stochastic fill around a fixed diagonal: row i keeps diag[i] and
// spreads its remaining mass over the other columns proportionally to
// weight[j]. With weight = diag and sum diag >= 1 every column's maximum
// lands on the diagonal. One-coordinate spaces only.
Mechanism DiagonalFillMechanism(const ProductSpace& space,
                                const std::vector<double>& diag,
                                const std::vector<double>& weight);

}  // namespace putlab

#endif  // PUTLAB_MECHANISM_CATALOG_H_
