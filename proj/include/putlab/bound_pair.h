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

#ifndef PUTLAB_BOUND_PAIR_H_
#define PUTLAB_BOUND_PAIR_H_

#include <string>

namespace putlab {

// Lower/upper values of a privacy-distortion function. exact means the two
// coincide analytically, not merely numerically.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  // Diagnostic, e.g. "vacuous-lower" when a clamped lower bound carries no
  // information.
  std::string note;
};

}  // namespace putlab

#endif  // PUTLAB_BOUND_PAIR_H_
