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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "persuade/advice.h"
#include "persuade/continuum.h"
#include "persuade/errors.h"
#include "persuade/io.h"
#include "persuade/oracle.h"
#include "persuade/plausibility.h"
#include "persuade/precision.h"
#include "persuade/solver.h"
#include "test_util.h"

namespace persuade {
namespace {

using testing::MakeBelief;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed sub-check; the detail line lists every failure.
  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double Seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool SupportMatches(const std::vector<Belief>& got,
                    const std::vector<Belief>& want, double tol) {
  if (got.size() != want.size()) return false;
  std::vector<int> perm(got.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    bool ok = true;
    for (size_t i = 0; i < perm.size() && ok; ++i) {
      ok = (got[perm[i]] - want[i]).cwiseAbs().maxCoeff() <= tol;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void Criterion1(Outcome& out) {
  auto t0 = std::chrono::steady_clock::now();
  Game f = FinancialGame();
  SolveResult r2 = Solve(f, 2);
  SolveResult r3 = Solve(f, 3);
  const double secs = Seconds(t0);
  out.detail.precision(6);
  out.detail << "V2=" << r2.value << " V3=" << r3.value << " time=" << secs
             << "s";
  out.Require(std::abs(r2.value - 0.30) <= 0.005, "V2 = 0.30 +- 0.005");
  out.Require(SupportMatches(r2.structure.support,
                             {MakeBelief({1, 0, 0}),
                              MakeBelief({0, 4.0 / 7, 3.0 / 7})},
                             0.02),
              "k=2 support");
  out.Require(std::abs(r3.value - 0.42) <= 0.005, "V3 = 0.42 +- 0.005");
  bool vertex_ok = r3.structure.size() == 3;
  for (int i = 0; vertex_ok && i < r3.structure.size(); ++i) {
    const Belief& mu = r3.structure.support[i];
    int idx = 0;
    vertex_ok = std::abs(mu.maxCoeff(&idx) - 1.0) <= 0.01 &&
                std::abs(r3.structure.weights[i] - f.prior()[idx]) <= 0.01;
  }
  out.Require(vertex_ok, "k=3 vertex support with prior weights");
  out.Require(secs < 10.0, "runtime < 10 s");
}

void Criterion2(Outcome& out) {
  auto t0 = std::chrono::steady_clock::now();
  const int grid = 60;
  std::vector<Belief> priors = InteriorSimplexGrid(grid);
  for (double pi : {0.60, 2.0 / 3.0}) {
    Solver s(ThresholdGame(pi));
    int bad = 0;
    double worst = 0.0;
    for (const Belief& mu : priors) {
      const double gap = s.SolveAt(mu, 3).value - s.SolveAt(mu, 2).value;
      worst = std::max(worst, gap);
      bad += gap > 1e-3;
    }
    out.detail << "pi=" << pi << ": max V3-V2=" << worst << " over "
               << priors.size() << " priors; ";
    out.Require(bad == 0, "V2 >= V3 - 1e-3 on the grid");
  }
  Solver s8(ThresholdGame(0.8));
  int strict = 0;
  for (const Belief& mu : priors) {
    if (InDeltaC(0.8, mu) && s8.SolveAt(mu, 2).value <= 1.0 - 1e-3) ++strict;
  }
  const double secs = Seconds(t0);
  out.detail << "pi=0.8: " << strict << " delta_c priors with V2 <= 1-1e-3; "
             << "time=" << secs << "s";
  out.Require(strict >= 1, "some delta_c prior with V2 < 1");
  out.Require(secs < 300.0, "runtime < 5 min");
}

void Criterion3(Outcome& out, std::mt19937_64& rng) {
  auto t0 = std::chrono::steady_clock::now();
  out.detail.precision(6);
  for (double pi : {0.7, 0.8, 0.9}) {
    Solver s(ThresholdGame(pi));
    TwoSignalBounds b = ThresholdTwoSignalBounds(pi);
    // Uniform on delta_c = {mu_i > 1 - pi}.
    const double floor = 1.0 - pi;
    const double span = 1.0 - 3.0 * floor;
    int violations = 0;
    double lo = 1e300;
    double hi = -1e300;
    for (int i = 0; i < 100; ++i) {
      Belief mu = Belief::Constant(3, floor) + span * testing::RandomBelief(rng, 3);
      mu /= mu.sum();
      if (!InDeltaC(pi, mu)) {
        --i;
        continue;
      }
      const double v = s.SolveAt(mu, 2).value;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      violations += v < b.lower - 1e-3 || v > b.upper + 1e-3;
    }
    const double bary = s.SolveAt(Barycenter(3), 2).value;
    out.detail << "pi=" << pi << ": sampled V2 in [" << lo << ", " << hi
               << "] vs [" << b.lower << ", " << b.upper << "], barycenter "
               << bary;
    out.Require(violations == 0, "sampled priors within bounds");
    out.Require(std::abs(bary - b.lower) <= 0.005, "barycenter value");

    // The corner of delta_c and its permutations.
    bool corners_ok = true;
    for (int j = 0; j < 3; ++j) {
      Belief corner = Belief::Constant(3, 1.0 - pi);
      corner[j] = 2.0 * pi - 1.0;
      const double v = s.SolveAt(corner, 2).value;
      Belief inside = 0.999999 * corner + 0.000001 * Barycenter(3);
      const double v_in = s.SolveAt(inside, 2).value;
      if (j == 0) {
        out.detail << ", corner " << v << " (limit from inside " << v_in
                   << ", target " << b.upper << "); ";
      }
      corners_ok &= std::abs(v - b.upper) <= 0.005;
    }
    out.Require(corners_ok, "corner values at pi=" + std::to_string(pi));
  }
  const double secs = Seconds(t0);
  out.detail << "time=" << secs << "s";
  out.Require(secs < 600.0, "runtime < 10 min");
}

void Criterion4(Outcome& out) {
  PrecisionCurve bary = ValueCurve(ThresholdGame(0.8), 3);
  PrecisionCurve edge =
      ValueCurve(ThresholdGame(0.8, MakeBelief({0.6, 0.2, 0.2})), 3);
  out.detail.precision(6);
  out.detail << "barycenter values (" << bary.values[0] << ", "
             << bary.values[1] << ", " << bary.values[2] << "); (0.6,0.2,0.2) "
             << "values (" << edge.values[0] << ", " << edge.values[1] << ", "
             << edge.values[2] << ")";
  out.Require(bary.increments[1] > bary.increments[0],
              "increasing increments at the barycenter");
  out.Require(edge.increments[1] < edge.increments[0],
              "decreasing increments at (0.6, 0.2, 0.2)");
}

void Criterion5(Outcome& out, std::mt19937_64& rng) {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 1e300;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    Game g = testing::RandomGame(rng, 4, 4, 0.1, 1.0);
    BoundCheck c = CheckIncrementBound(g, 3);
    worst = std::min(worst, c.slack);
    failures += c.slack < -1e-6;
  }
  const double secs = Seconds(t0);
  out.detail << "min slack=" << worst << " over 100 games, time=" << secs
             << "s";
  out.Require(failures == 0, "slack >= -1e-6 on all games");
  out.Require(secs < 900.0, "runtime < 15 min");
}

void Criterion6(Outcome& out, std::mt19937_64& rng) {
  const int resolution = 50;
  double worst_gap = 0.0;
  double worst_hull = -1e300;
  int gap_failures = 0;
  int hull_failures = 0;
  for (int i = 0; i < 50; ++i) {
    Game g = testing::RandomGame(rng, 3, 3 + i % 2);
    const double exact = Solve(g, 2).value;
    const double oracle = BruteForceSolve(g, 2, resolution).value;
    const double allowed = std::max(0.01, OracleGapBound(g, resolution));
    const double gap = std::abs(exact - oracle);
    worst_gap = std::max(worst_gap, gap);
    gap_failures += gap > allowed;
    const double hull = KConvexHullValue(g, 2, 2000, rng());
    worst_hull = std::max(worst_hull, hull - exact);
    hull_failures += hull > exact + 1e-6;
  }
  out.detail << "max |solve - oracle|=" << worst_gap
             << ", max hull - solve=" << worst_hull;
  out.Require(gap_failures == 0, "oracle agreement");
  out.Require(hull_failures == 0, "hull value <= solve + 1e-6");
}

void Criterion7(Outcome& out) {
  Game g = AdviceExampleGame();
  AdviceEquilibrium eq = SolveAdviceGame(g, 3);
  out.detail.precision(6);
  out.detail << "receiver values";
  for (const AdviceOutcome& o : eq.per_k) {
    out.detail << " k" << o.k << "=" << o.receiver_value;
  }
  Informativeness c = CompareInformativeness(eq.per_k[1].result.structure,
                                             eq.per_k[2].result.structure,
                                             g.prior());
  const int aligned = SolveAdviceGame(AlignedVariant(g), 3).chosen_k;
  out.detail << "; chosen_k=" << eq.chosen_k << ", k2 vs k3 " << ToString(c)
             << ", aligned chosen_k=" << aligned;
  out.Require(eq.chosen_k == 2, "chosen_k = 2");
  out.Require(c == Informativeness::kIncomparable, "k2 and k3 incomparable");
  out.Require(aligned == 3, "aligned chosen_k = 3");
}

void Criterion8(Outcome& out, std::mt19937_64& rng) {
  int count = 0;
  int value_drops = 0;
  int plaus_fail = 0;
  int dependent = 0;
  double worst_drop = 0.0;
  for (int gi = 0; gi < 50; ++gi) {
    const int n = 3 + gi % 3;
    Game base = testing::RandomGame(rng, n, 3 + gi % 4);
    for (int si = 0; si < 10; ++si) {
      InformationStructure tau =
          testing::RandomStructure(rng, n, 2 + (gi + si) % (n + 2));
      Game g = base.WithPrior(NormalizeBelief(tau.Mean()));
      const double before = EvaluateStructure(g, tau).sender;
      InformationStructure p = ProjectToBoundary(g, tau);
      InformationStructure r = ReduceAffinelyDependent(g, tau);
      for (const InformationStructure* o : {&p, &r}) {
        const double drop = before - EvaluateStructure(g, *o).sender;
        worst_drop = std::max(worst_drop, drop);
        value_drops += drop > 1e-9;
        try {
          CheckBayesPlausible(*o, g.prior(), 1e-9);
        } catch (const Error&) {
          ++plaus_fail;
        }
      }
      dependent += !IsAffinelyIndependent(r.support);
      ++count;
    }
  }
  out.detail << count << " structures, max value drop=" << worst_drop
             << ", plausibility failures=" << plaus_fail
             << ", dependent outputs=" << dependent;
  out.Require(value_drops == 0, "no value drop beyond 1e-9");
  out.Require(plaus_fail == 0, "Bayes plausibility to 1e-9");
  out.Require(dependent == 0, "reducer output affinely independent");
}

void Criterion9(Outcome& out) {
  auto t0 = std::chrono::steady_clock::now();
  ContinuumProblem p;
  p.prior = std::make_shared<UniformPrior>();
  p.cutoffs = {0.6};
  p.utilities = {0.0, 1.0};
  p.Validate();
  std::vector<PartitionResult> r;
  for (int k = 1; k <= 3; ++k) r.push_back(OptimizePartition(p, k, 200));
  const double secs = Seconds(t0);
  const PartitionResult& r2 = r[1];
  const double bp = r2.signal.breakpoints.size() == 3 ? r2.signal.breakpoints[1]
                                                      : -1.0;
  out.detail.precision(6);
  out.detail << "values (" << r[0].value << ", " << r[1].value << ", "
             << r[2].value << "), breakpoint " << bp
             << ", envelope violation " << r2.envelope_violation
             << ", time=" << secs << "s";
  out.Require(std::abs(r2.value - 0.8) <= 0.005, "k=2 value 0.8 +- 0.005");
  out.Require(std::abs(bp - 0.2) <= 0.01, "breakpoint 0.2 +- 0.01");
  out.Require(r[1].value >= r[0].value && r[2].value >= r[1].value,
              "monotone in k");
  bool inside = true;
  for (const PartitionResult& x : r) inside &= x.envelope_violation <= 1e-9;
  out.Require(inside, "c within [c0, c1] + 1e-9");
  out.Require(secs < 30.0, "runtime < 30 s");
}

}  // namespace
}  // namespace persuade

int main() {
  using namespace persuade;
  std::mt19937_64 rng(testing::TestSeed(20260101));
  struct Entry {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Entry> entries = {
      {1, "financial example", [](Outcome& o) { Criterion1(o); }},
      {2, "two vs three signals on the threshold family",
       [](Outcome& o) { Criterion2(o); }},
      {3, "two-signal bounds on delta_c",
       [&](Outcome& o) { Criterion3(o, rng); }},
      {4, "non-monotone value of precision", [](Outcome& o) { Criterion4(o); }},
      {5, "increment bound on positive games",
       [&](Outcome& o) { Criterion5(o, rng); }},
      {6, "oracle and k-convex-hull agreement",
       [&](Outcome& o) { Criterion6(o, rng); }},
      {7, "advice-seeking example", [](Outcome& o) { Criterion7(o); }},
      {8, "projection and reduction properties",
       [&](Outcome& o) { Criterion8(o, rng); }},
      {9, "continuum partition", [](Outcome& o) { Criterion9(o); }},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Outcome out;
    try {
      e.run(out);
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail << " [exception: " << ex.what() << "]";
    }
    failed += !out.pass;
    std::printf("%s criterion %d (%s): %s\n", out.pass ? "PASS" : "FAIL", e.id,
                e.name, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
