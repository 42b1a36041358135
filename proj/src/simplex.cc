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

#include "putlab/simplex.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace putlab {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasEps = 1e-7;

// Dense tableau in canonical form: columns are [structural | slack/surplus |
// artificial | rhs], one basic column per row.
struct Tableau {
  int nrows = 0;
  int ncols = 0;  // including rhs
  std::vector<double> a;
  std::vector<int> basis;
  int art_begin = 0;  // first artificial column
  int rhs_col = 0;

  double& at(int r, int c) { return a[static_cast<size_t>(r) * ncols + c]; }
  double at(int r, int c) const {
    return a[static_cast<size_t>(r) * ncols + c];
  }

  void Pivot(int pr, int pc) {
    const double pivot = at(pr, pc);
    const double inv = 1.0 / pivot;
    for (int c = 0; c < ncols; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < nrows; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (int c = 0; c < ncols; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis[pr] = pc;
  }
};

// Bland's rule: entering = lowest-index improving column, leaving = lowest
// basic index among minimum-ratio rows. Returns false when optimal.
// `allowed(c)` masks columns that may enter.
template <typename Allowed>
bool BlandStep(Tableau& t, std::vector<double>& cost, double& objective,
               const Allowed& allowed, bool* unbounded) {
  int enter = -1;
  for (int c = 0; c < t.rhs_col; ++c) {
    if (!allowed(c)) continue;
    if (cost[c] < -kPivotEps) {
      enter = c;
      break;
    }
  }
  if (enter < 0) return false;

  int leave = -1;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (int r = 0; r < t.nrows; ++r) {
    const double a = t.at(r, enter);
    if (a > kPivotEps) {
      const double ratio = t.at(r, t.rhs_col) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 &&
           (leave < 0 || t.basis[r] < t.basis[leave]))) {
        best_ratio = ratio;
        leave = r;
      }
    }
  }
  if (leave < 0) {
    *unbounded = true;
    return false;
  }

  // Update the reduced-cost row alongside the tableau; after the pivot, row
  // `leave` holds the normalized pivot row.
  const double ce = cost[enter];
  t.Pivot(leave, enter);
  for (int c = 0; c <= t.rhs_col; ++c) {
    cost[c] -= ce * t.at(leave, c);
  }
  cost[enter] = 0.0;
  objective = -cost[t.rhs_col];
  return true;
}

}  // namespace

LpSolution SolveLp(const LpProblem& problem) {
  const int nstruct = static_cast<int>(problem.objective.size());
  const int nrows = static_cast<int>(problem.rows.size());
  for (const LpRow& row : problem.rows) {
    if (static_cast<int>(row.coeffs.size()) != nstruct) {
      throw std::invalid_argument("LP row width does not match objective");
    }
  }

  // Scale each row to unit max magnitude (better pivot conditioning when
  // coefficients span orders of magnitude), then normalize to rhs >= 0.
  std::vector<LpRow> rows = problem.rows;
  for (LpRow& row : rows) {
    double peak = std::abs(row.rhs);
    for (double v : row.coeffs) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
      for (double& v : row.coeffs) v /= peak;
      row.rhs /= peak;
    }
    if (row.rhs < 0) {
      for (double& v : row.coeffs) v = -v;
      row.rhs = -row.rhs;
      if (row.cmp == LpCmp::kLe) {
        row.cmp = LpCmp::kGe;
      } else if (row.cmp == LpCmp::kGe) {
        row.cmp = LpCmp::kLe;
      }
    }
  }

  int nslack = 0;
  int nart = 0;
  for (const LpRow& row : rows) {
    if (row.cmp != LpCmp::kEq) ++nslack;
    if (row.cmp != LpCmp::kLe) ++nart;
  }

  Tableau t;
  t.nrows = nrows;
  t.art_begin = nstruct + nslack;
  t.rhs_col = nstruct + nslack + nart;
  t.ncols = t.rhs_col + 1;
  t.a.assign(static_cast<size_t>(t.nrows) * t.ncols, 0.0);
  t.basis.assign(nrows, -1);

  int slack_col = nstruct;
  int art_col = t.art_begin;
  for (int r = 0; r < nrows; ++r) {
    const LpRow& row = rows[r];
    for (int c = 0; c < nstruct; ++c) t.at(r, c) = row.coeffs[c];
    t.at(r, t.rhs_col) = row.rhs;
    if (row.cmp == LpCmp::kLe) {
      t.at(r, slack_col) = 1.0;
      t.basis[r] = slack_col++;
    } else if (row.cmp == LpCmp::kGe) {
      t.at(r, slack_col) = -1.0;
      ++slack_col;
      t.at(r, art_col) = 1.0;
      t.basis[r] = art_col++;
    } else {
      t.at(r, art_col) = 1.0;
      t.basis[r] = art_col++;
    }
  }

  LpSolution solution;

  // Reduced-cost row for the given raw costs under the current basis. Rebuilt
  // periodically because the incremental pivot updates drift over hundreds of
  // pivots.
  const auto canonical_cost = [&t](const std::vector<double>& raw) {
    std::vector<double> cost(t.ncols, 0.0);
    for (int c = 0; c < t.rhs_col; ++c) cost[c] = raw[c];
    for (int r = 0; r < t.nrows; ++r) {
      const int b = t.basis[r];
      if (b < 0 || b >= t.rhs_col) continue;
      const double cb = raw[b];
      if (cb == 0.0) continue;
      for (int c = 0; c <= t.rhs_col; ++c) cost[c] -= cb * t.at(r, c);
    }
    return cost;
  };
  const auto run_phase = [&](const std::vector<double>& raw, int art_begin,
                             bool* unbounded) {
    std::vector<double> cost = canonical_cost(raw);
    double objective = -cost[t.rhs_col];
    int since_rebuild = 0;
    int pivots = 0;
    const auto allowed = [art_begin](int c) { return c < art_begin; };
    while (BlandStep(t, cost, objective, allowed, unbounded)) {
      if (++pivots > 100000) {
        throw std::logic_error("simplex pivot budget exhausted");
      }
      if (++since_rebuild == 64) {
        cost = canonical_cost(raw);
        since_rebuild = 0;
      }
    }
  };

  // Phase one: minimize the artificial mass.
  if (nart > 0) {
    std::vector<double> raw(t.rhs_col, 0.0);
    for (int c = t.art_begin; c < t.rhs_col; ++c) raw[c] = 1.0;
    bool unbounded = false;
    run_phase(raw, t.rhs_col, &unbounded);  // artificials may pivot out
    double artificial_mass = 0.0;
    for (int r = 0; r < t.nrows; ++r) {
      if (t.basis[r] >= t.art_begin) artificial_mass += t.at(r, t.rhs_col);
    }
    if (artificial_mass > kFeasEps) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive leftover artificials out of the basis, pivoting on the largest
    // available entry so a near-zero pivot cannot blow up the tableau; rows
    // with no usable column are redundant and get zeroed.
    for (int r = 0; r < t.nrows; ++r) {
      if (t.basis[r] < t.art_begin) continue;
      int pc = -1;
      double best = 1e-7;
      for (int c = 0; c < t.art_begin; ++c) {
        const double mag = std::abs(t.at(r, c));
        if (mag > best) {
          best = mag;
          pc = c;
        }
      }
      if (pc >= 0) {
        t.Pivot(r, pc);
      } else {
        for (int c = 0; c <= t.rhs_col; ++c) t.at(r, c) = 0.0;
      }
    }
  }

  // Phase two: the real objective over non-artificial columns.
  {
    std::vector<double> raw(t.rhs_col, 0.0);
    for (int c = 0; c < nstruct; ++c) raw[c] = problem.objective[c];
    bool unbounded = false;
    run_phase(raw, t.art_begin, &unbounded);
    if (unbounded) {
      solution.status = LpStatus::kUnbounded;
      return solution;
    }
  }

  solution.status = LpStatus::kOptimal;
  solution.x.assign(nstruct, 0.0);
  for (int r = 0; r < t.nrows; ++r) {
    const int b = t.basis[r];
    if (b >= 0 && b < nstruct) solution.x[b] = t.at(r, t.rhs_col);
  }
  solution.objective = 0.0;
  for (int c = 0; c < nstruct; ++c) {
    solution.objective += problem.objective[c] * solution.x[c];
  }
  return solution;
}

bool LpFeasible(const LpProblem& problem, std::vector<double>* point) {
  LpProblem feas = problem;
  feas.objective.assign(problem.objective.empty()
                            ? problem.rows.front().coeffs.size()
                            : problem.objective.size(),
                        0.0);
  LpSolution s = SolveLp(feas);
  if (s.status != LpStatus::kOptimal) return false;
  if (point != nullptr) *point = s.x;
  return true;
}

}  // namespace putlab
