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

#ifndef PUTLAB_LOCAL_BOUNDS_H_
#define PUTLAB_LOCAL_BOUNDS_H_

#include <vector>

#include "putlab/bound_pair.h"
#include "putlab/privacy_notion.h"
#include "putlab/prior.h"
#include "putlab/source_set.h"

namespace putlab {

// Cumulative tails of a sorted prior: tails[k] = sum of the k smallest
// probabilities, so tails[0] = 0 and tails[m] = 1. These are the breakpoints
// of every known-prior closed form below.
std::vector<double> CumulativeTails(const Prior& sorted_prior);

// One-coordinate (n = 1) privacy-distortion function for a Class I source
// set and 0 < D <= 1. Exact for DP, approximate DP, maximal leakage, and
// mutual information; a bracket for max-information, Renyi, and Sibson. The
// max-information upper bound uses the set's smallest member probability.
BoundPair Class1Pd(const PrivacyNotion& notion, int m, double distortion,
                   const SourceSet& source_set);

// Known-prior closed forms, n = 1, prior sorted non-increasing (unsorted
// input throws; use SortWithPermutation first). Values in nats, zero exactly
// on the documented zero region.

// min over k with D > (1-delta) tails[k-1] of
//   log((m-k)(1-D-delta) / (D - (1-delta) tails[k-1])),
// clamped at zero; identically zero once D >= (1-delta) tails[m-1].
// delta = 0 recovers DpKnownPrior exactly.
double AdpKnownPrior(const Prior& sorted_prior, double distortion,
                     double delta);
double DpKnownPrior(const Prior& sorted_prior, double distortion);

// With k the bracket tails[k-1] < D <= tails[k]:
//   max{0, log(m - k - (D - tails[k]) / (tails[k] - tails[k-1]))};
// zero exactly once D >= tails[m-1].
double MlKnownPrior(const Prior& sorted_prior, double distortion);

// Smallest distortion achievable at leakage budget eps >= 0: the inverse of
// MlKnownPrior, maximized over the set's members (each sorted).
double MlDistortionFromLeakage(const SourceSet& source_set, double eps);

// Approximate-DP trade-off for a finite family with a common coordinate
// ordering (Class II): an outer sweep over the leading diagonal entry with an
// inner multi-prior dual LP. A singleton family reduces to AdpKnownPrior.
double AdpSourceSetClass2(const SourceSet& family, double distortion,
                          double delta);

}  // namespace putlab

#endif  // PUTLAB_LOCAL_BOUNDS_H_
