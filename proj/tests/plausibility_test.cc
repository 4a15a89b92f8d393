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

#include "persuade/plausibility.h"

#include <random>

#include "doctest.h"
#include "persuade/errors.h"
#include "persuade/precision.h"
#include "persuade/regions.h"
#include "test_util.h"

namespace persuade {
namespace {

using testing::MakeBelief;

InformationStructure Make(std::vector<Belief> support,
                          std::vector<double> weights) {
  InformationStructure tau;
  tau.support = std::move(support);
  tau.weights = std::move(weights);
  return tau;
}

// Structure with `first` at weight w and the complement that restores prior.
InformationStructure WithComplement(const Belief& prior, const Belief& first,
                                    double w) {
  return Make({first, (prior - w * first) / (1.0 - w)}, {w, 1.0 - w});
}

double Value(const Game& g, const InformationStructure& tau) {
  return EvaluateStructure(g, tau).sender;
}

TEST_CASE("affine independence") {
  CHECK(IsAffinelyIndependent(
      {MakeBelief({1, 0, 0}), MakeBelief({0, 1, 0}), MakeBelief({0, 0, 1})}));
  CHECK_FALSE(IsAffinelyIndependent({MakeBelief({1, 0, 0}),
                                     MakeBelief({0.5, 0.5, 0}),
                                     MakeBelief({0, 1, 0})}));
  CHECK(IsAffinelyIndependent(
      {MakeBelief({0.8, 0.1, 0.1}), MakeBelief({0, 0.5, 0.5})}));
}

TEST_CASE("choquet weights") {
  WeightSolution a = ChoquetWeights(
      {MakeBelief({1, 0, 0}), MakeBelief({0, 4.0 / 7, 3.0 / 7})},
      MakeBelief({0.3, 0.4, 0.3}));
  CHECK(a.weights[0] == doctest::Approx(0.3));
  CHECK(a.weights[1] == doctest::Approx(0.7));

  WeightSolution b = ChoquetWeights(
      {MakeBelief({1, 0, 0}), MakeBelief({0, 1, 0}), MakeBelief({0, 0, 1})},
      MakeBelief({0.3, 0.4, 0.3}));
  CHECK(b.weights[1] == doctest::Approx(0.4));

  WeightSolution c = ChoquetWeights(
      {MakeBelief({0.8, 0.1, 0.1}), MakeBelief({0, 0.5, 0.5})}, Barycenter(3));
  CHECK(c.weights[0] == doctest::Approx(5.0 / 12.0));
  CHECK(c.weights[1] == doctest::Approx(7.0 / 12.0));

  CHECK_THROWS_AS(ChoquetWeights({MakeBelief({1, 0, 0}),
                                  MakeBelief({0.5, 0.5, 0}),
                                  MakeBelief({0, 1, 0})},
                                 MakeBelief({0.5, 0.5, 0})),
                  NotAffinelyIndependent);
  CHECK_THROWS_AS(ChoquetWeights({MakeBelief({1, 0, 0}), MakeBelief({0, 1, 0})},
                                 Barycenter(3)),
                  Infeasible);
}

// Small perturbations of an affinely independent support move the weights
// by a bounded multiple of the perturbation, and less as it shrinks.
TEST_CASE("choquet weights are continuous") {
  std::mt19937_64 rng(testing::TestSeed(13));
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Belief> s = {testing::RandomBelief(rng, 3),
                             testing::RandomBelief(rng, 3),
                             testing::RandomBelief(rng, 3)};
    Belief w = testing::RandomInteriorBelief(rng, 3, 0.1);
    Belief prior = w[0] * s[0] + w[1] * s[1] + w[2] * s[2];
    std::vector<Belief> dirs;
    for (int i = 0; i < 3; ++i) {
      Belief d(3);
      d << g(rng), g(rng), g(rng);
      d.array() -= d.mean();
      dirs.push_back(d / d.norm());
    }
    auto shift = [&](double eps) {
      std::vector<Belief> p = s;
      for (int i = 0; i < 3; ++i) p[i] += eps * dirs[i];
      WeightSolution ws = ChoquetWeights(p, prior);
      double diff = 0.0;
      for (int i = 0; i < 3; ++i) {
        diff = std::max(diff, std::abs(ws.weights[i] - w[i]));
      }
      return diff;
    };
    const double c = 10.0 * shift(1e-6) / 1e-6 + 1.0;
    double prev = shift(1e-6);
    for (double eps : {1e-7, 1e-8}) {
      const double d = shift(eps);
      CHECK(d <= c * eps + 1e-12);
      CHECK(d <= prev + 1e-13);
      prev = d;
    }
  }
}

TEST_CASE("project to boundary fixpoint") {
  Game f = FinancialGame();
  InformationStructure tau =
      Make({MakeBelief({1, 0, 0}), MakeBelief({0, 4.0 / 7, 3.0 / 7})},
           {0.3, 0.7});
  InformationStructure out = ProjectToBoundary(f, tau);
  REQUIRE(out.size() == 2);
  CHECK((out.support[1] - tau.support[1]).norm() < 1e-12);
  CHECK(out.weights[0] == doctest::Approx(0.3));
}

TEST_CASE("project to boundary moves interior beliefs") {
  Game t = ThresholdGame(0.8);
  InformationStructure tau =
      WithComplement(t.prior(), MakeBelief({0.9, 0.05, 0.05}), 0.25);
  InformationStructure out = ProjectToBoundary(t, tau);
  CHECK(Value(t, out) >= Value(t, tau) - 1e-12);
  CHECK_NOTHROW(CheckBayesPlausible(out, t.prior()));
  ActionRegion r1 = BuildRegion(t, 1);
  bool on_boundary = false;
  for (const Belief& mu : out.support) {
    on_boundary |= Classify(r1, mu).kind == MembershipKind::kBoundary;
  }
  CHECK(on_boundary);

  Game f = FinancialGame();
  InformationStructure tf =
      WithComplement(f.prior(), MakeBelief({0.9, 0.05, 0.05}), 0.2);
  InformationStructure of = ProjectToBoundary(f, tf);
  CHECK(Value(f, of) >= Value(f, tf) - 1e-12);
  ActionRegion lng = BuildRegion(f, 0);
  bool hit = false;
  for (const Belief& mu : of.support) {
    hit |= Classify(lng, mu).kind == MembershipKind::kBoundary;
  }
  CHECK(hit);
}

TEST_CASE("reduce affinely dependent") {
  Game f = FinancialGame();
  InformationStructure vertices =
      Make({MakeBelief({1, 0, 0}), MakeBelief({0, 1, 0}), MakeBelief({0, 0, 1})},
           {0.3, 0.4, 0.3});
  InformationStructure same = ReduceAffinelyDependent(f, vertices);
  CHECK(same.size() == 3);

  // Four points on the 2-simplex around the barycenter.
  Game t = ThresholdGame(0.8);
  InformationStructure four =
      Make({MakeBelief({0.9, 0.05, 0.05}), MakeBelief({0.05, 0.9, 0.05}),
            MakeBelief({0.05, 0.05, 0.9}), Barycenter(3)},
           {0.25, 0.25, 0.25, 0.25});
  four.support[3] = (4.0 * Barycenter(3) - four.support[0] - four.support[1] -
                     four.support[2]);
  InformationStructure r = ReduceAffinelyDependent(t, four);
  CHECK(r.size() == 3);
  CHECK(IsAffinelyIndependent(r.support));
  CHECK(Value(t, r) >= Value(t, four) - 1e-9);
  CHECK_NOTHROW(CheckBayesPlausible(r, t.prior()));

  InformationStructure dup =
      Make({MakeBelief({1, 0, 0}), MakeBelief({1, 0, 0}),
            MakeBelief({0, 4.0 / 7, 3.0 / 7})},
           {0.1, 0.2, 0.7});
  InformationStructure d = ReduceAffinelyDependent(f, dup);
  REQUIRE(d.size() == 2);
  CHECK(d.weights[0] + d.weights[1] == doctest::Approx(1.0));
}

TEST_CASE("collapse pair") {
  InformationStructure v =
      Make({MakeBelief({1, 0, 0}), MakeBelief({0, 1, 0}), MakeBelief({0, 0, 1})},
           {0.3, 0.4, 0.3});
  InformationStructure c = CollapsePair(v, 0, 1);
  REQUIRE(c.size() == 2);
  CHECK((c.support[0] - MakeBelief({3.0 / 7, 4.0 / 7, 0})).norm() < 1e-12);
  CHECK(c.weights[0] == doctest::Approx(0.7));
  CHECK(c.weights[1] == doctest::Approx(0.3));

  InformationStructure dup =
      Make({MakeBelief({0.2, 0.8}), MakeBelief({0.2, 0.8}), MakeBelief({1, 0})},
           {0.25, 0.25, 0.5});
  InformationStructure d = CollapsePair(dup, 0, 1);
  REQUIRE(d.size() == 2);
  CHECK((d.support[0] - MakeBelief({0.2, 0.8})).norm() < 1e-12);
  CHECK(d.weights[0] == doctest::Approx(0.5));

  // Merging the two outer states of the financial optimum pools long and
  // short news into a belief where the receiver stays out.
  Game f = FinancialGame();
  InformationStructure m = CollapsePair(v, 0, 2);
  CHECK((m.support[0] - MakeBelief({0.5, 0, 0.5})).norm() < 1e-12);
  CHECK(m.weights[0] == doctest::Approx(0.6));
  CHECK(Value(f, m) == doctest::Approx(0.0));
  CHECK(Value(f, m) <= 0.30 + 1e-9);
}

// Sampled version of the property suite; the acceptance run uses 500.
TEST_CASE("projection and reduction never lose value") {
  std::mt19937_64 rng(testing::TestSeed(17));
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 2;
    Game g = testing::RandomGame(rng, n, 3 + trial % 3);
    InformationStructure tau = testing::RandomStructure(rng, n, 2 + trial % 5);
    g = g.WithPrior(NormalizeBelief(tau.Mean()));
    const double before = Value(g, tau);
    InformationStructure p = ProjectToBoundary(g, tau);
    CHECK(Value(g, p) >= before - 1e-9);
    CHECK_NOTHROW(CheckBayesPlausible(p, g.prior(), 1e-9));
    InformationStructure r = ReduceAffinelyDependent(g, tau);
    CHECK(Value(g, r) >= before - 1e-9);
    CHECK_NOTHROW(CheckBayesPlausible(r, g.prior(), 1e-9));
    CHECK(IsAffinelyIndependent(r.support));
  }
}

}  // namespace
}  // namespace persuade
