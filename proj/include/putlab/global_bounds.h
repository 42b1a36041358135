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

#ifndef PUTLAB_GLOBAL_BOUNDS_H_
#define PUTLAB_GLOBAL_BOUNDS_H_

#include "putlab/bound_pair.h"
#include "putlab/privacy_notion.h"
#include "putlab/prior.h"
#include "putlab/product_space.h"
#include "putlab/source_set.h"

namespace putlab {

// Closed-form losses of the Wang mechanism at distortion D on {1..m}^n.
// These are the upper bounds of the global trade-off (the mechanism is valid
// for every source set); each is clamped at zero. The prior-dependent ones
// are evaluated at the uniform input, where the mechanism's loss peaks over
// any Class I set.
double WangLossDp(int m, int n, double d);
double WangLossApproxDp(int m, int n, double d, double delta);
double WangLossMaxLeakage(int m, int n, double d);
double WangLossRenyiDp(int m, int n, double d, double alpha);
double WangLossSibsonUniform(int m, int n, double d, double alpha);
double WangLossMutualInfoUniform(int m, int n, double d);
// Max-information loss of the Wang mechanism under one concrete member
// prior: -log min_y sum_l A^-l P(N_l(y)), enumerated directly.
double WangLossMaxInfoMember(const ProductSpace& space, double d,
                             const Prior& member);

// Lower bounds parameterized by theta = m^n * max-min prior mass (and, for
// mutual information, eta = the matching max coordinate). At theta = 1 they
// reduce to the Class I forms. Each is clamped at zero.
double ThetaLowerDp(int m, int n, double d, double theta);
double ThetaLowerApproxDp(int m, int n, double d, double delta, double theta);
double ThetaLowerMaxInfo(int m, int n, double d, double theta);
double ThetaLowerMaxLeakage(int m, int n, double d, double theta);
double ThetaLowerRenyiDp(int m, int n, double d, double alpha, double theta);
double ThetaLowerSibson(int m, int n, double d, double alpha, double theta);
double ThetaLowerMutualInfo(int m, int n, double d, double theta, double eta);

// Brackets of the global privacy-distortion function on {1..m}^n for a
// distortion budget 0 < D <= n. Class I sets get the sharper forms (DP and
// mutual information come back exact); other sets get the theta-parameterized
// bounds. Every notion returns (0, 0, exact) once D >= n(m-1)/m. A clamped,
// information-free lower bound is flagged with note = "vacuous-lower".
BoundPair GlobalBounds(const PrivacyNotion& notion, const SourceSet& source_set,
                       const ProductSpace& space, double distortion);

}  // namespace putlab

#endif  // PUTLAB_GLOBAL_BOUNDS_H_
