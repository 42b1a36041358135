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

// Command-line front end: trade-off curves and bounds, loss evaluation,
// mechanism construction, parallel composition, and closed-form
// verification against the brute-force oracles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "putlab/composition.h"
#include "putlab/global_bounds.h"
#include "putlab/local_bounds.h"
#include "putlab/mechanism_catalog.h"
#include "putlab/oracles.h"
#include "putlab/privacy_loss.h"

namespace {

using putlab::BoundPair;
using putlab::Mechanism;
using putlab::Prior;
using putlab::PrivacyNotion;
using putlab::ProductSpace;
using putlab::SourceSet;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string FormatValue(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

struct NotionFlags {
  bool dp = false;
  std::vector<double> adp;
  bool maxinfo = false;
  bool ml = false;
  std::vector<double> rdp;
  std::vector<double> sibson;
  bool mi = false;

  void Register(CLI::App* cmd) {
    cmd->add_flag("--dp", dp, "differential privacy");
    cmd->add_option("--adp", adp,
                    "approximate DP with this delta (repeatable)");
    cmd->add_flag("--maxinfo", maxinfo, "maximal information");
    cmd->add_flag("--ml", ml, "maximal leakage");
    cmd->add_option("--rdp", rdp, "Renyi DP with this alpha (repeatable)");
    cmd->add_option("--sibson", sibson,
                    "Sibson mutual information with this alpha (repeatable)");
    cmd->add_flag("--mi", mi, "mutual information");
  }

  std::vector<PrivacyNotion> Collect() const {
    std::vector<PrivacyNotion> notions;
    if (dp) notions.push_back(PrivacyNotion::Dp());
    for (double d : adp) notions.push_back(PrivacyNotion::ApproxDp(d));
    if (maxinfo) notions.push_back(PrivacyNotion::MaxInfo());
    if (ml) notions.push_back(PrivacyNotion::MaxLeakage());
    for (double a : rdp) notions.push_back(PrivacyNotion::RenyiDp(a));
    for (double a : sibson) notions.push_back(PrivacyNotion::SibsonMi(a));
    if (mi) notions.push_back(PrivacyNotion::MutualInfo());
    return notions;
  }
};

std::vector<double> ParseCommaList(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<double> ParseGrid(const std::string& text, double limit) {
  double start = 0, stop = 0;
  int points = 0;
  char c1 = 0, c2 = 0;
  std::stringstream stream(text);
  if (!(stream >> start >> c1 >> stop >> c2 >> points) || c1 != ':' ||
      c2 != ':') {
    throw CLI::ValidationError("--grid", "expected START:STOP:POINTS");
  }
  if (points < 1 || !(start > 0.0) || stop > limit || start > stop ||
      (points > 1 && !(start < stop))) {
    throw CLI::ValidationError("--grid",
                               "grid must increase strictly within (0, n]");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = points == 1 ? start
                          : start + (stop - start) * i / (points - 1);
  }
  return grid;
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// curve

struct CurveArgs {
  std::string setting = "local";
  int m = 2;
  int n = 1;
  bool class1 = false;
  bool simplex = false;
  std::string prior_csv;
  std::string grid = "0.01:0.99:99";
  std::string out;
  bool gnuplot = false;
  NotionFlags notions;
};

BoundPair CurvePoint(const PrivacyNotion& notion, const CurveArgs& args,
                     const SourceSet& source, const ProductSpace& space,
                     double d) {
  if (args.setting == "global") {
    return putlab::GlobalBounds(notion, source, space, d);
  }
  if (args.setting == "composed") {
    return putlab::ComposedPd(notion, args.m, args.n, d, source);
  }
  // local
  if (source.class_tag() == putlab::SourceClass::kClassI) {
    return putlab::Class1Pd(notion, args.m, d, source);
  }
  const Prior& prior = source.members()[0];
  BoundPair out;
  switch (notion.kind()) {
    case putlab::NotionKind::kDp:
      out.lower = out.upper = putlab::DpKnownPrior(prior, d);
      out.exact = true;
      return out;
    case putlab::NotionKind::kApproxDp:
      out.lower = out.upper = putlab::AdpKnownPrior(prior, d, notion.delta());
      out.exact = true;
      return out;
    case putlab::NotionKind::kMaxLeakage:
      out.lower = out.upper = putlab::MlKnownPrior(prior, d);
      out.exact = true;
      return out;
    default:
      // No known-prior closed form; fall back to the theta brackets.
      return putlab::GlobalBounds(notion, source, space, d);
  }
}

int RunCurve(const CurveArgs& args) {
  const std::vector<PrivacyNotion> notions = args.notions.Collect();
  if (notions.empty()) {
    throw CLI::ValidationError("curve", "select at least one notion flag");
  }
  if (args.setting == "local" && args.n != 1) {
    throw CLI::ValidationError("curve", "the local setting is one-coordinate");
  }
  ProductSpace space(args.m, args.setting == "local" ? 1 : args.n);
  ProductSpace base_space(args.m, 1);

  std::optional<SourceSet> source;
  if (!args.prior_csv.empty()) {
    ProductSpace prior_space = args.setting == "global" ? space : base_space;
    Prior raw(prior_space, ParseCommaList(args.prior_csv));
    // The order-sensitive closed forms need a sorted prior; sorting here only
    // relabels symbols, which a trade-off curve does not care about.
    source = SourceSet::Singleton(putlab::SortWithPermutation(raw).prior);
  } else if (args.class1 || args.simplex) {
    source = SourceSet::FullSimplex(args.setting == "global" ? space
                                                             : base_space);
  } else {
    throw CLI::ValidationError("curve",
                               "pick --class1, --simplex, or --prior");
  }

  const double limit =
      args.setting == "local" ? 1.0 : static_cast<double>(args.n);
  const std::vector<double> grid = ParseGrid(args.grid, limit);

  struct CurveRow {
    double d;
    std::string label;
    BoundPair bounds;
  };
  std::vector<CurveRow> rows;
  for (double d : grid) {
    for (const PrivacyNotion& notion : notions) {
      rows.push_back({d, notion.Label(),
                      CurvePoint(notion, args, *source, space, d)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.label < b.label;
  });

  std::string csv = "D,notion,lower,upper,exact\n";
  for (const CurveRow& row : rows) {
    csv += FormatValue(row.d) + "," + row.label + "," +
           FormatValue(row.bounds.lower) + "," + FormatValue(row.bounds.upper) +
           "," + (row.bounds.exact ? "1" : "0") + "\n";
  }
  WriteTextFile(args.out, csv);

  if (args.gnuplot) {
    std::string script =
        "set datafile separator ','\n"
        "set xlabel 'D'\n"
        "set ylabel 'privacy loss (nats)'\n"
        "set key outside\n"
        "plot \\\n";
    bool first = true;
    for (const PrivacyNotion& notion : notions) {
      const std::string label = notion.Label();
      if (!first) script += ", \\\n";
      first = false;
      script += "  \"< awk -F, '$2==\\\"" + label + "\\\"' " + args.out +
                "\" using 1:3 with lines title '" + label + " lower'" +
                ", \\\n  \"< awk -F, '$2==\\\"" + label + "\\\"' " + args.out +
                "\" using 1:4 with lines dashtype 2 title '" + label +
                " upper'";
    }
    script += "\n";
    WriteTextFile(args.out + ".gp", script);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

int RunEval(const std::string& mechanism_path, const std::string& prior_path,
            const NotionFlags& flags) {
  Mechanism q = Mechanism::FromJson(ReadJsonFile(mechanism_path));
  std::optional<Prior> prior;
  if (!prior_path.empty()) {
    prior = Prior::FromJson(ReadJsonFile(prior_path));
  }
  const std::vector<PrivacyNotion> notions = flags.Collect();
  if (notions.empty()) {
    throw CLI::ValidationError("eval", "select at least one notion flag");
  }
  for (const PrivacyNotion& notion : notions) {
    if (notion.prior_required() && !prior.has_value()) {
      throw CLI::ValidationError(
          "eval", "the notion \"" + notion.Label() + "\" needs --prior");
    }
    const double v =
        putlab::EvalLoss(notion, q, prior.has_value() ? &*prior : nullptr);
    std::cout << notion.Label() << " " << FormatValue(v) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string name;
  int m = 2;
  int n = 1;
  double distortion = 0.25;
  double delta = 0.1;
  std::string prior_csv;
  std::string out;
};

int RunConstruct(const ConstructArgs& args) {
  std::optional<Prior> prior;
  if (!args.prior_csv.empty()) {
    std::vector<double> probs = ParseCommaList(args.prior_csv);
    Prior raw(ProductSpace(static_cast<int>(probs.size()), 1), probs);
    prior = putlab::SortWithPermutation(raw).prior;
  }

  std::optional<Mechanism> q;
  if (args.name == "uniform") {
    q = putlab::UniformMechanism(ProductSpace(args.m, args.n));
  } else if (args.name == "identity") {
    q = putlab::IdentityMechanism(ProductSpace(args.m, args.n));
  } else if (args.name == "wang") {
    q = putlab::WangMechanism(ProductSpace(args.m, args.n), args.distortion);
  } else if (args.name == "qdelta") {
    q = putlab::QDeltaMechanism(args.m, args.delta);
  } else if (args.name == "optimal-adp") {
    if (!prior.has_value()) {
      throw CLI::ValidationError("construct", "optimal-adp needs --prior");
    }
    q = putlab::OptimalAdpMechanism(*prior, args.distortion, args.delta);
  } else if (args.name == "optimal-ml") {
    if (!prior.has_value()) {
      throw CLI::ValidationError("construct", "optimal-ml needs --prior");
    }
    q = putlab::OptimalMlMechanism(*prior, args.distortion);
  } else {
    throw CLI::ValidationError("construct", "unknown mechanism " + args.name);
  }

  if (!args.out.empty()) {
    WriteTextFile(args.out, q->ToJson().dump(2) + "\n");
  }
  const Prior uniform = Prior::Uniform(q->space_in());
  std::cout << "name " << args.name << "\n";
  std::cout << "m " << q->space_in().m() << "\n";
  std::cout << "n " << q->space_in().n() << "\n";
  std::cout << "dp " << FormatValue(putlab::EvalLoss(PrivacyNotion::Dp(), *q))
            << "\n";
  std::cout << "ml "
            << FormatValue(putlab::EvalLoss(PrivacyNotion::MaxLeakage(), *q))
            << "\n";
  if (args.name == "qdelta" || args.name == "optimal-adp") {
    const PrivacyNotion adp = PrivacyNotion::ApproxDp(args.delta);
    std::cout << adp.Label() << " "
              << FormatValue(putlab::EvalLoss(adp, *q)) << "\n";
  }
  std::cout << "distortion_uniform "
            << FormatValue(putlab::ExpectedDistortion(*q, uniform)) << "\n";
  if (prior.has_value() && prior->space() == q->space_in()) {
    std::cout << "distortion_prior "
              << FormatValue(putlab::ExpectedDistortion(*q, *prior)) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compose

int RunCompose(const std::string& mechanism_path, int n,
               const std::string& prior_path, const std::string& out,
               const NotionFlags& flags) {
  Mechanism base = Mechanism::FromJson(ReadJsonFile(mechanism_path));
  std::optional<Prior> prior;
  if (!prior_path.empty()) prior = Prior::FromJson(ReadJsonFile(prior_path));

  std::vector<PrivacyNotion> notions = flags.Collect();
  if (notions.empty()) {
    notions = {PrivacyNotion::Dp(), PrivacyNotion::MaxLeakage()};
  }
  const putlab::ProductMechanism product = putlab::Compose(base, n);
  std::cout << "realized " << (product.realized.has_value() ? "1" : "0")
            << "\n";
  for (const PrivacyNotion& notion : notions) {
    if (notion.kind() == putlab::NotionKind::kApproxDp) {
      // No composition law; report the sandwich from the one-coordinate
      // losses at delta and delta * m^(n-1).
      const double m = base.space_in().m();
      const double blown = notion.delta() * std::pow(m, n - 1);
      const double hi = putlab::EvalLoss(notion, base);
      const double lo =
          blown < 1.0
              ? putlab::EvalLoss(PrivacyNotion::ApproxDp(blown), base)
              : 0.0;
      std::cout << notion.Label() << "_sandwich " << FormatValue(lo) << " "
                << FormatValue(hi) << "\n";
      continue;
    }
    if (notion.prior_required() && !prior.has_value()) {
      throw CLI::ValidationError(
          "compose", "the notion \"" + notion.Label() + "\" needs --prior");
    }
    const double law = putlab::ComposedLossLaw(
        notion, base, prior.has_value() ? &*prior : nullptr, n);
    std::cout << notion.Label() << " " << FormatValue(law) << "\n";
  }
  if (!out.empty()) {
    if (!product.realized.has_value()) {
      throw CLI::ValidationError("compose",
                                 "m^n exceeds the enumeration cap; nothing "
                                 "to write");
    }
    WriteTextFile(out, product.realized->ToJson().dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int RunVerify(std::uint64_t seed, int trials, const std::string& only,
              const std::string& out) {
  if (trials < 1) {
    throw CLI::ValidationError("verify", "--trials must be at least 1");
  }
  const putlab::VerifyReport report =
      putlab::VerifyClosedForms(seed, trials, only);
  const std::string text = report.ToJson().dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(out, text);
  }
  return report.AllPass() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("PUTLAB_CAP")) {
    try {
      putlab::SetEnumerationCap(std::stoll(cap));
    } catch (const std::exception& e) {
      std::cerr << "bad PUTLAB_CAP: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{
      "privacy-distortion trade-offs for finite mechanisms: curves, bounds, "
      "optimal constructions, and oracle verification"};
  app.require_subcommand(1);

  CurveArgs curve_args;
  NotionFlags eval_flags, compose_flags;
  ConstructArgs construct_args;
  std::string eval_mechanism, eval_prior;
  std::string compose_mechanism, compose_prior, compose_out;
  int compose_n = 2;
  std::uint64_t verify_seed = 1;
  int verify_trials = 50;
  std::string verify_only, verify_out;

  CLI::App* curve = app.add_subcommand(
      "curve", "sweep a distortion grid and emit CSV bounds");
  curve->add_option("--setting", curve_args.setting, "local|global|composed")
      ->check(CLI::IsMember({"local", "global", "composed"}));
  curve->add_option("--m", curve_args.m, "alphabet size")->required();
  curve->add_option("--n", curve_args.n, "coordinates (global/composed)");
  curve->add_flag("--class1", curve_args.class1,
                  "source set: the full probability simplex");
  curve->add_flag("--simplex", curve_args.simplex, "alias of --class1");
  curve->add_option("--prior", curve_args.prior_csv,
                    "source set: one known prior, comma-separated (sorted "
                    "internally)");
  curve->add_option("--grid", curve_args.grid, "D grid as START:STOP:POINTS");
  curve->add_option("--out", curve_args.out, "output CSV path")->required();
  curve->add_flag("--gnuplot", curve_args.gnuplot,
                  "also write a companion plotting script");
  curve_args.notions.Register(curve);

  CLI::App* eval = app.add_subcommand("eval", "evaluate losses of a mechanism");
  eval->add_option("--mechanism", eval_mechanism, "mechanism JSON path")
      ->required();
  eval->add_option("--prior", eval_prior, "prior JSON path");
  eval_flags.Register(eval);

  CLI::App* construct =
      app.add_subcommand("construct", "build a catalog mechanism");
  construct
      ->add_option("name", construct_args.name,
                   "uniform|identity|wang|qdelta|optimal-adp|optimal-ml")
      ->required();
  construct->add_option("--m", construct_args.m, "alphabet size");
  construct->add_option("--n", construct_args.n, "coordinates");
  construct->add_option("--D", construct_args.distortion, "distortion budget");
  construct->add_option("--delta", construct_args.delta, "approximate-DP delta");
  construct->add_option("--prior", construct_args.prior_csv,
                        "comma-separated prior (sorted internally)");
  construct->add_option("--out", construct_args.out, "mechanism JSON path");

  CLI::App* compose = app.add_subcommand(
      "compose", "i.i.d. parallel composition of a one-coordinate mechanism");
  compose->add_option("--mechanism", compose_mechanism, "mechanism JSON path")
      ->required();
  compose->add_option("--n", compose_n, "number of coordinates")->required();
  compose->add_option("--prior", compose_prior, "prior JSON path");
  compose->add_option("--out", compose_out, "realized product JSON path");
  compose_flags.Register(compose);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the oracle suite against every closed form");
  verify->add_option("--seed", verify_seed, "run seed");
  verify->add_option("--trials", verify_trials, "number of sampled priors");
  verify->add_option("--only", verify_only, "restrict to matching targets");
  verify->add_option("--out", verify_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
    if (curve->parsed()) return RunCurve(curve_args);
    if (eval->parsed()) return RunEval(eval_mechanism, eval_prior, eval_flags);
    if (construct->parsed()) return RunConstruct(construct_args);
    if (compose->parsed()) {
      return RunCompose(compose_mechanism, compose_n, compose_prior,
                        compose_out, compose_flags);
    }
    if (verify->parsed()) {
      return RunVerify(verify_seed, verify_trials, verify_only, verify_out);
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
