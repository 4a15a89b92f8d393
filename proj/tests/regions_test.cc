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

#include "persuade/regions.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "persuade/advice.h"
#include "persuade/precision.h"
#include "test_util.h"

namespace persuade {
namespace {

using testing::MakeBelief;

bool ContainsBelief(const std::vector<Belief>& pts, const Belief& b) {
  return std::any_of(pts.begin(), pts.end(), [&](const Belief& p) {
    return (p - b).cwiseAbs().maxCoeff() < 1e-9;
  });
}

Game IndifferentGame(int preferred) {
  Eigen::MatrixXd sender = Eigen::MatrixXd::Zero(3, 3);
  sender.row(preferred).setOnes();
  return Game::FromMatrices(testing::Labels("w", 3), testing::Labels("a", 3),
                            Eigen::MatrixXd::Zero(3, 3), sender,
                            Barycenter(3));
}

TEST_CASE("threshold regions") {
  std::vector<ActionRegion> regions = BuildRegions(ThresholdGame(0.7));
  REQUIRE(regions.size() == 4);
  const ActionRegion& r1 = regions[1];
  CHECK(r1.vertices.size() == 3);
  CHECK(ContainsBelief(r1.vertices, MakeBelief({1, 0, 0})));
  CHECK(ContainsBelief(r1.vertices, MakeBelief({0.7, 0.3, 0})));
  CHECK(ContainsBelief(r1.vertices, MakeBelief({0.7, 0, 0.3})));
  CHECK(r1.facets.size() == 3);
  CHECK(r1.full_dimensional());

  std::vector<ActionRegion> r8 = BuildRegions(ThresholdGame(0.8));
  CHECK(r8[0].facets.size() == 6);
  CHECK(r8[0].vertices.size() == 6);
}

TEST_CASE("whole simplex regions") {
  for (const ActionRegion& r : BuildRegions(IndifferentGame(0))) {
    CHECK(r.vertices.size() == 3);
    CHECK(EnumerateFacets(r).size() == 3);
    CHECK(ContainsBelief(r.vertices, MakeBelief({0, 0, 1})));
  }
}

TEST_CASE("financial regions") {
  Game f = FinancialGame();
  std::vector<ActionRegion> regions = BuildRegions(f);
  const ActionRegion& lng = regions[0];
  const ActionRegion& shrt = regions[1];
  const ActionRegion& none = regions[2];
  CHECK(ContainsBelief(lng.vertices, MakeBelief({1, 0, 0})));
  CHECK(ContainsBelief(lng.vertices, MakeBelief({0.3, 0.7, 0})));
  CHECK(ContainsBelief(lng.vertices, MakeBelief({0.65, 0, 0.35})));
  CHECK(ContainsBelief(shrt.vertices, MakeBelief({0, 0, 1})));
  CHECK(none.vertices.size() == 5);
  for (const ActionRegion& r : regions) CHECK(r.full_dimensional());
}

TEST_CASE("membership classification") {
  ActionRegion r1 = BuildRegions(ThresholdGame(0.8))[1];
  CHECK(Classify(r1, MakeBelief({0.9, 0.05, 0.05})).kind ==
        MembershipKind::kInterior);
  Membership m = Classify(r1, MakeBelief({0.8, 0.1, 0.1}));
  REQUIRE(m.kind == MembershipKind::kBoundary);
  REQUIRE(m.facets.size() == 1);
  const Facet& f = r1.facets[m.facets[0]];
  CHECK(r1.halfspaces[f.tight_constraint].kind == Halfspace::Kind::kPayoff);
  CHECK(Classify(r1, Barycenter(3)).kind == MembershipKind::kOutside);
}

TEST_CASE("sender subzones") {
  Game t = ThresholdGame(0.8);
  std::vector<SenderSubzone> z = SenderSubzones(t, BuildRegion(t, 1));
  REQUIRE(z.size() == 1);
  CHECK(z[0].chosen_action == 1);

  Game flat = IndifferentGame(2);
  std::vector<SenderSubzone> zf = SenderSubzones(flat, BuildRegion(flat, 0));
  REQUIRE(zf.size() == 1);
  CHECK(zf[0].chosen_action == 2);
}

// On every subzone the sender's value is the chosen action's linear form.
TEST_CASE("sender value is affine on each subzone") {
  std::mt19937_64 rng(testing::TestSeed(5));
  std::vector<Game> games = {AdviceExampleGame(), FinancialGame()};
  for (int i = 0; i < 10; ++i) games.push_back(testing::RandomGame(rng, 3, 4));
  for (const Game& g : games) {
    for (int a = 0; a < g.num_actions(); ++a) {
      ActionRegion region = BuildRegion(g, a);
      if (region.empty) continue;
      for (const SenderSubzone& z : SenderSubzones(g, region)) {
        REQUIRE(!z.vertices.empty());
        for (int s = 0; s < 20; ++s) {
          Belief w = testing::RandomBelief(rng, static_cast<int>(z.vertices.size()));
          Belief mu = Belief::Zero(g.num_states());
          for (size_t v = 0; v < z.vertices.size(); ++v) mu += w[v] * z.vertices[v];
          CHECK(SenderValue(g, mu) ==
                doctest::Approx(g.sender_linear().row(z.chosen_action).dot(mu))
                    .epsilon(1e-7));
        }
      }
    }
  }
}

TEST_CASE("advice game region of the first action splits") {
  Game g = AdviceExampleGame();
  std::vector<SenderSubzone> z = SenderSubzones(g, BuildRegion(g, 0));
  REQUIRE(!z.empty());
  for (const SenderSubzone& s : z) CHECK(s.parent_action == 0);
}

// Regions cover the simplex and each vertex satisfies its constraints.
TEST_CASE("regions cover the simplex") {
  std::mt19937_64 rng(testing::TestSeed(7));
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    Game g = testing::RandomGame(rng, n, 2 + trial % 5);
    std::vector<ActionRegion> regions = BuildRegions(g);
    for (const ActionRegion& r : regions) {
      for (const Belief& v : r.vertices) {
        for (const Halfspace& h : r.halfspaces) CHECK(h.Slack(v) > -1e-8);
        CHECK(std::abs(v.sum() - 1.0) < 1e-9);
      }
    }
    for (int s = 0; s < 50; ++s) {
      Belief mu = testing::RandomBelief(rng, n);
      bool covered = false;
      for (int a : OptimalActionSet(g, mu)) {
        covered |= Classify(regions[a], mu).kind != MembershipKind::kOutside;
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("distinct facets dedupe shared boundaries") {
  std::vector<ActionRegion> regions = BuildRegions(ThresholdGame(0.8));
  std::vector<GlobalFacet> facets = DistinctFacets(regions);
  // Three threshold planes shared by R_0 and R_i, three faces of R_0 and two
  // faces per R_i.
  CHECK(facets.size() == 12);
  int shared = 0;
  for (const GlobalFacet& f : facets) shared += f.owners.size() > 1;
  CHECK(shared == 3);
}

TEST_CASE("regions csv") {
  std::string csv = RegionsCsv(FinancialGame(), BuildRegions(FinancialGame()));
  CHECK(csv.rfind("action,kind,facet,vertex,mu_up,mu_flat,mu_down", 0) == 0);
}

}  // namespace
}  // namespace persuade
