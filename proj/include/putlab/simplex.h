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

#ifndef PUTLAB_SIMPLEX_H_
#define PUTLAB_SIMPLEX_H_

#include <vector>

namespace putlab {

// Dense two-phase primal simplex with Bland's rule. Bland pivoting is
// cycle-free and fully deterministic, which matters more than speed at the
// problem sizes used here (tens of variables).
//
// Minimizes c . x subject to the given rows, x >= 0.

enum class LpCmp { kLe, kGe, kEq };

struct LpRow {
  std::vector<double> coeffs;
  LpCmp cmp;
  double rhs;
};

struct LpProblem {
  std::vector<double> objective;  // minimized
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status;
  double objective = 0.0;
  std::vector<double> x;
};

LpSolution SolveLp(const LpProblem& problem);

// Phase-one only: does a feasible point exist? Returns the point found when
// so. Cheaper than SolveLp for pure feasibility queries.
bool LpFeasible(const LpProblem& problem, std::vector<double>* point = nullptr);

}  // namespace putlab

#endif  // PUTLAB_SIMPLEX_H_
