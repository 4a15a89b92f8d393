// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Summaries go to stdout, tables to --output CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "persuade/advice.h"
#include "persuade/continuum.h"
#include "persuade/errors.h"
#include "persuade/io.h"
#include "persuade/oracle.h"
#include "persuade/precision.h"
#include "persuade/solver.h"

namespace {

using namespace persuade;

constexpr int kExitValidation = 2;
constexpr int kExitScale = 3;
constexpr int kExitInfeasible = 4;

std::string FormatBelief(const Belief& b) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (int i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
  os << ")";
  return os.str();
}

std::string DescribeFacet(const Game& game, const Facet& f) {
  const Halfspace& h = BuildRegion(game, f.parent_action)
                           .halfspaces[f.tight_constraint];
  std::string out = game.actions()[f.parent_action] + " on ";
  if (h.kind == Halfspace::Kind::kSimplexFace) {
    return out + "mu_" + game.states()[h.other] + " = 0";
  }
  return out + "indifference with " + game.actions()[h.other];
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write output file: " + path);
  out << text;
}

std::vector<double> ParseList(const std::string& s, const char* field) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError(std::string(field) + ": not a number: " + item);
    }
  }
  return out;
}

void PrintWarnings(const SolveResult& r) {
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

int RunSolve(const std::string& game_arg, int k, const SolveOptions& opts,
             const std::string& output) {
  Game game = LoadGame(game_arg);
  SolveResult r = Solve(game, k, opts);
  PrintWarnings(r);
  std::cout.precision(10);
  std::cout << "value " << r.value << "\n";
  Eigen::MatrixXd kernel = SignalKernel(game, r.structure);
  for (int i = 0; i < r.structure.size(); ++i) {
    std::cout << "signal " << i << " weight " << r.structure.weights[i]
              << " belief " << FormatBelief(r.structure.support[i])
              << " action " << game.actions()[r.support_actions[i]] << "\n";
  }
  std::cout << "kernel (rows = signals, columns = states)\n";
  for (int i = 0; i < kernel.rows(); ++i) {
    std::cout << " ";
    for (int w = 0; w < kernel.cols(); ++w) std::cout << " " << kernel(i, w);
    std::cout << "\n";
  }
  for (int i = 0; i < r.collection.size(); ++i) {
    std::cout << "facet " << i << ": "
              << DescribeFacet(game, r.collection.facets[i]) << "\n";
  }
  if (r.oracle_gap) std::cout << "hull_gap " << *r.oracle_gap << "\n";
  WriteOutput(output, SolveResultCsv(game, r));
  return 0;
}

int RunPrecision(const std::string& game_arg, int kmax,
                 const SolveOptions& opts, const std::string& output) {
  Game game = LoadGame(game_arg);
  PrecisionCurve c = ValueCurve(game, kmax, opts);
  std::ostringstream os;
  os.precision(12);
  os << "k,value,increment\n";
  for (size_t j = 0; j < c.values.size(); ++j) {
    os << j + 1 << "," << c.values[j] << ",";
    if (j < c.increments.size()) os << c.increments[j];
    os << "\n";
  }
  std::cout << os.str();
  WriteOutput(output, os.str());
  return 0;
}

int RunThreshold(double pi, int grid, const std::string& output) {
  std::vector<ThresholdPoint> pts = ThresholdSweep(pi, grid);
  int inside = 0;
  int out_of_bounds = 0;
  if (pi > 2.0 / 3.0) {
    TwoSignalBounds bounds = ThresholdTwoSignalBounds(pi);
    for (const ThresholdPoint& p : pts) {
      if (!p.in_delta_c) continue;
      ++inside;
      if (p.v2 < bounds.lower - 1e-3 || p.v2 > bounds.upper + 1e-3) {
        ++out_of_bounds;
      }
    }
  }
  std::cout << "grid priors in delta_c: " << inside
            << ", outside two-signal bounds: " << out_of_bounds << "\n";
  WriteOutput(output, ThresholdCsv(pi, pts));
  return 0;
}

int RunAdvice(const std::string& game_arg, int kmax, const SolveOptions& opts,
              const std::string& output) {
  Game game = LoadGame(game_arg);
  AdviceEquilibrium eq = SolveAdviceGame(game, kmax, opts);
  std::ostringstream os;
  os.precision(12);
  os << "k,sender_value,receiver_value,chosen\n";
  for (const AdviceOutcome& o : eq.per_k) {
    os << o.k << "," << o.result.value << "," << o.receiver_value << ","
       << (o.k == eq.chosen_k ? 1 : 0) << "\n";
  }
  std::cout << os.str() << "chosen_k " << eq.chosen_k << "\n";
  if (eq.per_k.size() >= 2) {
    const AdviceOutcome& a = eq.per_k[eq.per_k.size() - 2];
    const AdviceOutcome& b = eq.per_k.back();
    std::cout << "compare k=" << a.k << " vs k=" << b.k << ": "
              << ToString(CompareInformativeness(a.result.structure,
                                                 b.result.structure,
                                                 game.prior()))
              << "\n";
  }
  WriteOutput(output, os.str());
  return 0;
}

int RunContinuum(const std::string& prior, const std::string& cutoffs,
                 const std::string& utilities, int k, int grid,
                 const std::string& output) {
  ContinuumProblem p;
  p.prior = ParsePrior(prior);
  p.cutoffs = ParseList(cutoffs, "cutoffs");
  p.utilities = ParseList(utilities, "utilities");
  p.Validate();
  PartitionResult r = OptimizePartition(p, k, grid);
  std::cout.precision(10);
  std::cout << "value " << r.value << "\n";
  std::cout << "envelope_violation " << r.envelope_violation << "\n";
  std::ostringstream os;
  os.precision(12);
  os << "cell,left,right,mass,mean,action\n";
  const PartitionSignal& s = r.signal;
  for (int i = 0; i < s.cells(); ++i) {
    os << i << "," << s.breakpoints[i] << "," << s.breakpoints[i + 1] << ","
       << s.interval_masses[i] << "," << s.interval_means[i] << ","
       << ActionAtMean(p, s.interval_means[i]) << "\n";
  }
  std::cout << os.str();
  WriteOutput(output, os.str());
  return 0;
}

int RunVerify(const std::string& game_arg, int k, int resolution,
              const SolveOptions& opts) {
  Game game = LoadGame(game_arg);
  SolveResult r = Solve(game, k, opts);
  OracleResult o = BruteForceSolve(game, k, resolution);
  const double bound = std::max(0.01, OracleGapBound(game, resolution));
  std::cout.precision(10);
  std::cout << "solver " << r.value << "\n"
            << "oracle " << o.value << " (" << o.candidates
            << " candidate beliefs)\n"
            << "gap " << r.value - o.value << "\n"
            << "allowed " << bound << "\n";
  return std::abs(r.value - o.value) <= bound ? 0 : 1;
}

int RunSurface(const std::string& game_arg, int k, int grid,
               const std::string& output) {
  Game game = LoadGame(game_arg);
  std::vector<SurfacePoint> pts = Surface(game, k, grid);
  double best = -std::numeric_limits<double>::infinity();
  for (const SurfacePoint& p : pts) best = std::max(best, p.value);
  std::cout.precision(10);
  std::cout << "max " << best << "\n"
            << "at prior " << Solve(game, k).value << "\n";
  WriteOutput(output, SurfaceCsv(pts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained Bayesian persuasion solver"};
  app.require_subcommand(1);

  std::string game_arg;
  std::string output;
  int k = 2;
  int kmax = 3;
  int grid = 60;
  int resolution = 50;
  double pi = 0.8;
  SolveOptions opts;
  std::string prior = "uniform";
  std::string cutoffs = "0.6";
  std::string utilities = "0,1";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opts.seed, "RNG seed (PERSUADE_SEED overrides)");
    sub->add_option("--restarts", opts.restarts,
                    "sampled supports for the k-convex-hull check")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", opts.tol, "value tie tolerance")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "optimal k-signal structure");
  solve->add_option("--game", game_arg, "game JSON or builtin")->required();
  solve->add_option("--signals,-k", k, "number of signals")->required();
  solve->add_option("--output,-o", output, "CSV output");
  add_common(solve);

  CLI::App* precision =
      app.add_subcommand("precision", "V*(k) for k = 1..kmax");
  precision->add_option("--game", game_arg, "game JSON or builtin")->required();
  precision->add_option("--kmax", kmax, "largest k")->required();
  precision->add_option("--output,-o", output, "CSV output");
  add_common(precision);

  CLI::App* threshold =
      app.add_subcommand("threshold", "V*(2) of the threshold game on a grid");
  threshold->add_option("--pi", pi, "threshold in (1/3, 1)")->required();
  threshold->add_option("--grid", grid, "lattice divisions");
  threshold->add_option("--output,-o", output, "CSV output");

  CLI::App* advice = app.add_subcommand("advice", "advice-seeking equilibrium");
  advice->add_option("--game", game_arg, "game JSON or builtin")->required();
  advice->add_option("--kmax", kmax, "largest k")->required();
  advice->add_option("--output,-o", output, "CSV output");
  add_common(advice);

  CLI::App* continuum =
      app.add_subcommand("continuum", "monotone partition on [0, 1]");
  continuum->add_option("--prior", prior,
                        "uniform, power:P or pwl:x:F,... (interior knots)");
  continuum->add_option("--cutoffs", cutoffs, "comma separated");
  continuum->add_option("--utilities", utilities, "comma separated");
  continuum->add_option("--signals,-k", k, "number of signals");
  continuum->add_option("--grid", grid, "lattice divisions");
  continuum->add_option("--output,-o", output, "CSV output");

  CLI::App* verify = app.add_subcommand("verify", "solver vs brute force");
  verify->add_option("--game", game_arg, "game JSON or builtin")->required();
  verify->add_option("--signals,-k", k, "number of signals")->required();
  verify->add_option("--resolution", resolution, "oracle lattice divisions");
  add_common(verify);

  CLI::App* surface =
      app.add_subcommand("surface", "V*(k) over a ternary prior grid");
  surface->add_option("--game", game_arg, "game JSON or builtin")->required();
  surface->add_option("--signals,-k", k, "number of signals")->required();
  surface->add_option("--grid", grid, "lattice divisions");
  surface->add_option("--output,-o", output, "CSV output");

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("PERSUADE_SEED")) {
    try {
      opts.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: PERSUADE_SEED is not an integer\n";
      return kExitValidation;
    }
  }

  try {
    if (*solve) return RunSolve(game_arg, k, opts, output);
    if (*precision) return RunPrecision(game_arg, kmax, opts, output);
    if (*threshold) return RunThreshold(pi, grid, output);
    if (*advice) return RunAdvice(game_arg, kmax, opts, output);
    if (*continuum) {
      return RunContinuum(prior, cutoffs, utilities, k, grid, output);
    }
    if (*verify) return RunVerify(game_arg, k, resolution, opts);
    if (*surface) return RunSurface(game_arg, k, grid, output);
  } catch (const ScaleExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScale;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
