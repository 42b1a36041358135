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

#ifndef PUTLAB_COMPOSITION_H_
#define PUTLAB_COMPOSITION_H_

#include <optional>

#include "putlab/bound_pair.h"
#include "putlab/mechanism.h"
#include "putlab/privacy_notion.h"
#include "putlab/prior.h"
#include "putlab/source_set.h"

namespace putlab {

// The same one-coordinate mechanism applied independently to n i.i.d.
// coordinates: Q(y|x) = prod_j base(y_j|x_j). The explicit matrix is
// realized when m^n fits the enumeration cap; the composition laws stay
// available either way.
struct ProductMechanism {
  Mechanism base;
  int n;
  std::optional<Mechanism> realized;
};

// Requires a square base over (m, 1).
ProductMechanism Compose(const Mechanism& base, int n);

// The i.i.d. product of a one-coordinate prior over (m, n).
Prior ProductPrior(const Prior& base, int n);

// Loss of the n-fold product by the parallel-composition laws: DP and Renyi
// DP are invariant; max-information, maximal leakage, Sibson, and mutual
// information scale by n. Approximate DP obeys only a sandwich, so it is
// rejected here. When the product fits the cap the law value is cross-checked
// against direct evaluation on the realized matrix within 1e-9.
double ComposedLossLaw(const PrivacyNotion& notion, const Mechanism& base,
                       const Prior* base_prior, int n);

// Privacy-distortion brackets over {1..m}^n for i.i.d. composition, taking
// the TOTAL distortion budget 0 < D <= n (divided by n internally, since the
// one-coordinate trade-off governs the per-coordinate budget). Class I
// sets support all seven notions (DP, maximal leakage, and mutual information
// exact); sorted singletons support approximate DP and maximal leakage, both
// exact.
BoundPair ComposedPd(const PrivacyNotion& notion, int m, int n,
                     double total_distortion, const SourceSet& source_set);

}  // namespace putlab

#endif  // PUTLAB_COMPOSITION_H_
