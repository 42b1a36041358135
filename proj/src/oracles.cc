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

#include "putlab/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "putlab/mechanism_catalog.h"
#include "putlab/privacy_loss.h"
#include "putlab/simplex.h"

namespace putlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireLocal(const std::vector<Prior>& priors, double distortion,
                  int max_m) {
  if (priors.empty()) throw std::invalid_argument("need at least one prior");
  for (const Prior& p : priors) {
    if (p.space().n() != 1 || !(p.space() == priors[0].space())) {
      throw std::invalid_argument("oracle priors must share one (m,1) space");
    }
  }
  if (priors[0].space().m() > max_m) {
    throw std::invalid_argument("oracle limited to small alphabets");
  }
  if (!(distortion > 0.0) || distortion > 1.0) {
    throw std::invalid_argument("distortion must lie in (0, 1]");
  }
}

// Rows common to every oracle LP over the entries q[i*m+j]: row-stochasticity
// and one validity constraint per prior.
void AppendMechanismPolytope(int m, const std::vector<Prior>& priors,
                             double distortion, int total_vars,
                             LpProblem* lp) {
  for (int i = 0; i < m; ++i) {
    LpRow row;
    row.coeffs.assign(total_vars, 0.0);
    for (int j = 0; j < m; ++j) row.coeffs[i * m + j] = 1.0;
    row.cmp = LpCmp::kEq;
    row.rhs = 1.0;
    lp->rows.push_back(std::move(row));
  }
  for (const Prior& p : priors) {
    LpRow validity;
    validity.coeffs.assign(total_vars, 0.0);
    for (int i = 0; i < m; ++i) validity.coeffs[i * m + i] = p[i];
    validity.cmp = LpCmp::kGe;
    validity.rhs = 1.0 - distortion;
    lp->rows.push_back(std::move(validity));
  }
}

OracleResult MaxLeakageLpOracle(const std::vector<Prior>& priors,
                                double distortion) {
  const ProductSpace& space = priors[0].space();
  const int m = space.m();
  const int total = m * m + m;  // entries then per-column maxima
  LpProblem lp;
  lp.objective.assign(total, 0.0);
  for (int j = 0; j < m; ++j) lp.objective[m * m + j] = 1.0;
  AppendMechanismPolytope(m, priors, distortion, total, &lp);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      LpRow row;
      row.coeffs.assign(total, 0.0);
      row.coeffs[i * m + j] = 1.0;
      row.coeffs[m * m + j] = -1.0;
      row.cmp = LpCmp::kLe;
      row.rhs = 0.0;
      lp.rows.push_back(std::move(row));
    }
  }
  LpSolution s = SolveLp(lp);
  if (s.status != LpStatus::kOptimal) {
    throw std::logic_error("leakage oracle LP must be solvable");
  }
  // Certify with the diagonal fill of the column maxima: same objective,
  // still valid, and the maxima provably sit on the diagonal.
  std::vector<double> maxima(s.x.begin() + m * m, s.x.end());
  OracleResult out{std::log(s.objective),
                   DiagonalFillMechanism(space, maxima, maxima), 1, 1e-12,
                   true};
  return out;
}

// Feasibility of the valid polytope intersected with a privacy family at a
// fixed eps. The three families are linear in the entries once eps is fixed.
bool PrivacyFeasible(const PrivacyNotion& notion,
                     const std::vector<Prior>& priors, double distortion,
                     double eps, std::vector<double>* point) {
  const int m = priors[0].space().m();
  const double scale = std::exp(eps);
  const int total = m * m;
  LpProblem lp;
  lp.objective.assign(total, 0.0);
  AppendMechanismPolytope(m, priors, distortion, total, &lp);
  switch (notion.kind()) {
    case NotionKind::kDp:
    case NotionKind::kApproxDp: {
      const double slack =
          notion.kind() == NotionKind::kApproxDp ? notion.delta() : 0.0;
      for (int j = 0; j < m; ++j) {
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            LpRow row;
            row.coeffs.assign(total, 0.0);
            row.coeffs[a * m + j] = 1.0;
            row.coeffs[b * m + j] -= scale;
            row.cmp = LpCmp::kLe;
            row.rhs = slack;
            lp.rows.push_back(std::move(row));
          }
        }
      }
      break;
    }
    case NotionKind::kMaxInfo: {
      const Prior& p = priors[0];
      for (int j = 0; j < m; ++j) {
        for (int a = 0; a < m; ++a) {
          LpRow row;
          row.coeffs.assign(total, 0.0);
          row.coeffs[a * m + j] += 1.0;
          for (int b = 0; b < m; ++b) row.coeffs[b * m + j] -= scale * p[b];
          row.cmp = LpCmp::kLe;
          row.rhs = 0.0;
          lp.rows.push_back(std::move(row));
        }
      }
      break;
    }
    default:
      throw std::invalid_argument("bisection oracle covers dp/adp/maxinfo");
  }
  return LpFeasible(lp, point);
}

OracleResult BisectionLpOracle(const PrivacyNotion& notion,
                               const std::vector<Prior>& priors,
                               double distortion, double tol) {
  const ProductSpace& space = priors[0].space();
  const int m = space.m();
  auto to_mechanism = [&](const std::vector<double>& flat) {
    std::vector<std::vector<double>> rows(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) rows[i][j] = std::max(0.0, flat[i * m + j]);
    }
    return Mechanism(space, std::move(rows));
  };

  std::vector<double> point;
  int iterations = 1;
  if (PrivacyFeasible(notion, priors, distortion, 0.0, &point)) {
    return OracleResult{0.0, to_mechanism(point), iterations, 0.0, true};
  }

  // The distance-exponential mechanism caps the optimum, so this bracket is
  // always feasible.
  double lo = 0.0;
  double hi = std::log((m - 1) * (1.0 - distortion) / distortion) + 1.0;
  std::vector<double> feasible_point;
  if (!PrivacyFeasible(notion, priors, distortion, hi, &feasible_point)) {
    throw std::logic_error("bisection oracle bracket is infeasible");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    ++iterations;
    if (PrivacyFeasible(notion, priors, distortion, mid, &point)) {
      hi = mid;
      feasible_point = point;
    } else {
      lo = mid;
    }
  }
  return OracleResult{0.5 * (lo + hi), to_mechanism(feasible_point),
                      iterations, 0.5 * (hi - lo), true};
}

// ---------------------------------------------------------------------------
// Blahut-Arimoto for the rate-distortion view of mutual information.

struct BaPoint {
  double rate = 0.0;
  double distortion = 0.0;
  std::vector<std::vector<double>> rows;
  int iterations = 0;
};

// Fixed-multiplier inner iteration; beta > 0 trades rate against distortion.
BaPoint BlahutArimoto(const Prior& p, double beta,
                      std::vector<double>* warm_marginal) {
  const int m = static_cast<int>(p.size());
  std::vector<double> marginal =
      warm_marginal != nullptr && !warm_marginal->empty()
          ? *warm_marginal
          : std::vector<double>(m, 1.0 / m);
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  const double off = std::exp(-beta);
  int iter = 0;
  for (; iter < 50000; ++iter) {
    for (int i = 0; i < m; ++i) {
      double norm = 0.0;
      for (int j = 0; j < m; ++j) {
        rows[i][j] = marginal[j] * (i == j ? 1.0 : off);
        norm += rows[i][j];
      }
      for (int j = 0; j < m; ++j) rows[i][j] /= norm;
    }
    double change = 0.0;
    for (int j = 0; j < m; ++j) {
      double q = 0.0;
      for (int i = 0; i < m; ++i) q += p[i] * rows[i][j];
      change = std::max(change, std::abs(q - marginal[j]));
      marginal[j] = q;
    }
    if (change < 1e-15) break;
  }
  BaPoint out;
  out.iterations = iter;
  out.rows = rows;
  for (int i = 0; i < m; ++i) {
    out.distortion += p[i] * (1.0 - rows[i][i]);
    for (int j = 0; j < m; ++j) {
      if (rows[i][j] > 0.0 && marginal[j] > 0.0) {
        out.rate += p[i] * rows[i][j] * std::log(rows[i][j] / marginal[j]);
      }
    }
  }
  out.rate = std::max(0.0, out.rate);
  if (warm_marginal != nullptr) *warm_marginal = marginal;
  return out;
}

OracleResult MutualInfoOracle(const Prior& p, double distortion) {
  const ProductSpace& space = p.space();
  const int m = space.m();

  // Rate zero is reachable once a single-column mechanism fits the budget;
  // aiming everything at the likeliest symbol needs distortion 1 - max P.
  double peak = 0.0;
  int arg_peak = 0;
  for (int i = 0; i < m; ++i) {
    if (p[i] > peak) {
      peak = p[i];
      arg_peak = i;
    }
  }
  if (distortion >= 1.0 - peak - 1e-13) {
    std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) rows[i][arg_peak] = 1.0;
    return OracleResult{0.0, Mechanism(space, std::move(rows)), 1, 0.0, true};
  }

  std::vector<double> warm;
  double beta_lo = 1e-6;   // distortion near its zero-rate maximum
  double beta_hi = 500.0;  // distortion essentially zero
  int iterations = 0;
  BaPoint feasible = BlahutArimoto(p, beta_hi, &warm);
  iterations += feasible.iterations;
  double feasible_beta = beta_hi;
  warm.clear();
  for (int step = 0; step < 200; ++step) {
    const double beta = 0.5 * (beta_lo + beta_hi);
    BaPoint point = BlahutArimoto(p, beta, &warm);
    iterations += point.iterations;
    if (point.distortion <= distortion) {
      beta_hi = beta;
      feasible = point;
      feasible_beta = beta;
    } else {
      beta_lo = beta;
    }
    if (std::abs(point.distortion - distortion) < 1e-13 ||
        beta_hi - beta_lo < 1e-13) {
      break;
    }
  }
  // The curve is convex with slope -beta, so the remaining gap is bounded by
  // beta times the distortion shortfall.
  const double slack = feasible_beta * (distortion - feasible.distortion);
  return OracleResult{feasible.rate, Mechanism(space, feasible.rows),
                      iterations, std::max(slack, 1e-12), true};
}

// ---------------------------------------------------------------------------
// Projected gradient descent for the Sibson and Renyi trade-offs.

using Matrix = std::vector<std::vector<double>>;

void ProjectRowOntoSimplex(std::vector<double>& row) {
  // Clamp wild inputs first: beyond this range the projection result only
  // depends on entry order anyway, and the threshold recursion would cancel
  // catastrophically at magnitudes near 1e16.
  for (double& v : row) v = std::clamp(v, -1e6, 1e6);
  std::vector<double> sorted = row;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double running = 0.0;
  double threshold = 0.0;
  bool found = false;
  for (size_t k = 0; k < sorted.size(); ++k) {
    running += sorted[k];
    const double candidate = (running - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) {
      threshold = candidate;
      found = true;
    }
  }
  if (!found) {
    std::fill(row.begin(), row.end(), 1.0 / static_cast<double>(row.size()));
    return;
  }
  double total = 0.0;
  for (double& v : row) {
    v = std::max(0.0, v - threshold);
    total += v;
  }
  for (double& v : row) v /= total;
}

// Dykstra alternation between the validity half-space
// sum_i P_i q_ii >= 1 - D and the per-row simplices. The row projection runs
// last, so the returned point is exactly row-stochastic and meets the
// half-space up to the alternation tolerance.
Matrix ProjectToFeasible(const Matrix& input, const Prior& p,
                         double distortion) {
  const int m = static_cast<int>(p.size());
  double norm2 = 0.0;
  for (int i = 0; i < m; ++i) norm2 += p[i] * p[i];
  Matrix x = input;
  Matrix u(m, std::vector<double>(m, 0.0));
  Matrix v(m, std::vector<double>(m, 0.0));
  for (int sweep = 0; sweep < 2000; ++sweep) {
    double change = 0.0;
    double diag = 0.0;
    for (int i = 0; i < m; ++i) diag += p[i] * (x[i][i] + u[i][i]);
    const double shortfall = (1.0 - distortion) - diag;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double before = x[i][j] + u[i][j];
        double projected = before;
        if (shortfall > 0.0 && i == j) {
          projected += p[i] * shortfall / norm2;
        }
        u[i][j] = before - projected;
        x[i][j] = projected;
      }
    }
    for (int i = 0; i < m; ++i) {
      std::vector<double> before(m);
      for (int j = 0; j < m; ++j) before[j] = x[i][j] + v[i][j];
      std::vector<double> projected = before;
      ProjectRowOntoSimplex(projected);
      for (int j = 0; j < m; ++j) {
        v[i][j] = before[j] - projected[j];
        change = std::max(change, std::abs(projected[j] - x[i][j]));
        x[i][j] = projected[j];
      }
    }
    if (change < 1e-11 && sweep > 2) break;
  }
  // Guarantee validity outright: blend toward the identity by the residual
  // shortfall (a convex repair of at most the alternation tolerance).
  double diag = 0.0;
  double diag_gap = 0.0;
  for (int i = 0; i < m; ++i) {
    diag += p[i] * x[i][i];
    diag_gap += p[i] * (1.0 - x[i][i]);
  }
  const double shortfall = (1.0 - distortion) - diag;
  if (shortfall > 0.0 && diag_gap > 0.0) {
    const double t = std::min(1.0, shortfall / diag_gap);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        x[i][j] = (1.0 - t) * x[i][j] + (i == j ? t : 0.0);
      }
    }
  }
  return x;
}

double FlooredEntry(double v) { return std::max(v, 1e-12); }

// Sibson surrogate: sum_y (sum_x P_x Q_xy^alpha)^(1/alpha), convex and
// monotone in the loss.
double SibsonSurrogate(const Matrix& q, const Prior& p, double alpha) {
  const int m = static_cast<int>(p.size());
  double total = 0.0;
  for (int y = 0; y < m; ++y) {
    double inner = 0.0;
    for (int x = 0; x < m; ++x) {
      inner += p[x] * std::pow(FlooredEntry(q[x][y]), alpha);
    }
    total += std::pow(inner, 1.0 / alpha);
  }
  return total;
}

Matrix SibsonGradient(const Matrix& q, const Prior& p, double alpha) {
  const int m = static_cast<int>(p.size());
  Matrix g(m, std::vector<double>(m, 0.0));
  for (int y = 0; y < m; ++y) {
    double inner = 0.0;
    for (int x = 0; x < m; ++x) {
      inner += p[x] * std::pow(FlooredEntry(q[x][y]), alpha);
    }
    const double outer = std::pow(inner, 1.0 / alpha - 1.0);
    for (int x = 0; x < m; ++x) {
      g[x][y] = outer * p[x] * std::pow(FlooredEntry(q[x][y]), alpha - 1.0);
    }
  }
  return g;
}

// Smoothed maximum of the pairwise Renyi sums, temperature mu.
double RenyiSmoothed(const Matrix& q, double alpha, double mu,
                     Matrix* gradient) {
  const int m = static_cast<int>(q.size());
  std::vector<double> values;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      double t = 0.0;
      for (int y = 0; y < m; ++y) {
        t += std::pow(FlooredEntry(q[a][y]), alpha) *
             std::pow(FlooredEntry(q[b][y]), 1.0 - alpha);
      }
      values.push_back(t);
      pairs.emplace_back(a, b);
    }
  }
  const double peak = *std::max_element(values.begin(), values.end());
  double z = 0.0;
  for (double t : values) z += std::exp((t - peak) / mu);
  const double smoothed = peak + mu * std::log(z);
  if (gradient != nullptr) {
    for (auto& row : *gradient) std::fill(row.begin(), row.end(), 0.0);
    for (size_t k = 0; k < pairs.size(); ++k) {
      const double w = std::exp((values[k] - peak) / mu) / z;
      if (w < 1e-14) continue;
      const auto [a, b] = pairs[k];
      for (int y = 0; y < m; ++y) {
        const double qa = FlooredEntry(q[a][y]);
        const double qb = FlooredEntry(q[b][y]);
        (*gradient)[a][y] += w * alpha * std::pow(qa / qb, alpha - 1.0);
        (*gradient)[b][y] += w * (1.0 - alpha) * std::pow(qa / qb, alpha);
      }
    }
  }
  return smoothed;
}

OracleResult ConvexDescentOracle(const PrivacyNotion& notion, const Prior& p,
                                 double distortion, double tol,
                                 std::uint64_t seed) {
  const ProductSpace& space = p.space();
  const int m = space.m();
  const double alpha = notion.alpha();
  const bool sibson = notion.kind() == NotionKind::kSibsonMi;

  auto finalize = [&](const Matrix& q) {
    Matrix cleaned = q;
    for (auto& row : cleaned) {
      for (double& v : row) v = FlooredEntry(v);
    }
    return Mechanism(space, cleaned);
  };

  double best_value = kInf;
  double worst_restart = -kInf;
  Matrix best;
  int iterations = 0;

  for (int restart = 0; restart < 16; ++restart) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (restart + 1));
    Matrix q(m, std::vector<double>(m, 1.0 / m));
    if (restart > 0) {
      std::exponential_distribution<double> expo(1.0);
      for (auto& row : q) {
        double sum = 0.0;
        for (double& vv : row) {
          vv = expo(rng) + 1e-3;
          sum += vv;
        }
        for (double& vv : row) vv /= sum;
      }
    }
    q = ProjectToFeasible(q, p, distortion);

    const std::vector<double> schedule =
        sibson ? std::vector<double>{0.0}
               : std::vector<double>{1e-1, 1e-3, 1e-5, 1e-8};
    double step = 0.25;
    for (double mu : schedule) {
      auto value_of = [&](const Matrix& mat) {
        return sibson ? SibsonSurrogate(mat, p, alpha)
                      : RenyiSmoothed(mat, alpha, mu, nullptr);
      };
      Matrix gradient(m, std::vector<double>(m, 0.0));
      double current = value_of(q);
      const int max_steps = sibson ? 6000 : 2500;
      for (int it = 0; it < max_steps; ++it) {
        ++iterations;
        if (sibson) {
          gradient = SibsonGradient(q, p, alpha);
        } else {
          RenyiSmoothed(q, alpha, mu, &gradient);
        }
        Matrix candidate = q;
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < m; ++j) {
            candidate[i][j] -= step * gradient[i][j];
          }
        }
        candidate = ProjectToFeasible(candidate, p, distortion);
        const double cv = value_of(candidate);
        if (cv < current - 1e-15) {
          q = std::move(candidate);
          current = cv;
          step = std::min(step * 1.2, 64.0);
        } else {
          step *= 0.5;
          if (step < 1e-13) break;
        }
      }
      step = std::max(step, 1e-6);
    }

    const Mechanism cert = finalize(q);
    const double value = EvalLoss(notion, cert, p);
    worst_restart = std::max(worst_restart, value);
    if (value < best_value) {
      best_value = value;
      best = q;
    }
  }

  OracleResult out{best_value, finalize(best), iterations, tol, true};
  if (worst_restart - best_value > 10.0 * tol) out.certified = false;
  return out;
}

}  // namespace

OracleResult OraclePdLpMulti(const PrivacyNotion& notion,
                             const std::vector<Prior>& priors,
                             double distortion, double tol) {
  RequireLocal(priors, distortion, 6);
  if (tol < 1e-8) {
    throw std::invalid_argument("bisection tolerance below 1e-8 is not useful");
  }
  if (notion.kind() == NotionKind::kMaxLeakage) {
    return MaxLeakageLpOracle(priors, distortion);
  }
  return BisectionLpOracle(notion, priors, distortion, tol);
}

OracleResult OraclePdLp(const PrivacyNotion& notion, const Prior& prior,
                        double distortion, double tol) {
  return OraclePdLpMulti(notion, {prior}, distortion, tol);
}

OracleResult OraclePdConvex(const PrivacyNotion& notion, const Prior& prior,
                            double distortion, double tol,
                            std::uint64_t seed) {
  RequireLocal({prior}, distortion, 4);
  switch (notion.kind()) {
    case NotionKind::kMutualInfo:
      return MutualInfoOracle(prior, distortion);
    case NotionKind::kSibsonMi:
    case NotionKind::kRenyiDp:
      return ConvexDescentOracle(notion, prior, distortion, tol, seed);
    default:
      throw std::invalid_argument(
          "convex oracle covers mutual information, Sibson, and Renyi");
  }
}

}  // namespace putlab
