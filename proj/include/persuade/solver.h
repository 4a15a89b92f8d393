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

#ifndef PERSUADE_SOLVER_H_
#define PERSUADE_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "persuade/game.h"
#include "persuade/regions.h"

namespace persuade {

inline constexpr int kMaxStates = 8;
inline constexpr int kMaxActions = 8;
inline constexpr int kMaxSignals = 5;

struct FacetCollection {
  std::vector<Facet> facets;
  int size() const { return static_cast<int>(facets.size()); }
};

struct SolveOptions {
  std::uint64_t seed = 0;
  // Number of sampled supports for the k-convex-hull cross-check; 0 skips it.
  int restarts = 0;
  // Values within `tol` of the best count as ties.
  double tol = 1e-9;
};

struct SolveResult {
  double value = 0.0;
  InformationStructure structure;
  // One facet per support belief, empty for the no-information structure
  // when the prior is interior to its region.
  FacetCollection collection;
  // Sender-preferred action at each support belief.
  std::vector<int> support_actions;
  // Linear programs solved.
  int iterations = 0;
  int restarts = 0;
  // value minus the sampled k-convex-hull value, when requested.
  std::optional<double> oracle_gap;
  std::vector<std::string> warnings;
};

// Region geometry depends only on receiver payoffs, so a Solver can sweep
// many priors cheaply.
class Solver {
 public:
  explicit Solver(const Game& game);

  SolveResult Solve(int k, const SolveOptions& options = {}) const;
  SolveResult SolveAt(const Belief& prior, int k,
                      const SolveOptions& options = {}) const;

  const Game& game() const { return game_; }
  const std::vector<ActionRegion>& regions() const { return regions_; }
  const std::vector<GlobalFacet>& facets() const { return facets_; }

 private:
  Game game_;
  std::vector<ActionRegion> regions_;
  std::vector<GlobalFacet> facets_;
};

SolveResult Solve(const Game& game, int k, const SolveOptions& options = {});

// All multisets of at most k distinct-geometry facets whose joint vertex hull
// contains the prior.
std::vector<FacetCollection> EnumerateFacetCollections(const Game& game, int k);

struct CollectionOptimum {
  double value = 0.0;
  InformationStructure structure;
};

// Best structure with belief i restricted to facet i. Throws Infeasible when
// the prior is out of reach.
CollectionOptimum MaximizeOnCollection(const Game& game,
                                       const FacetCollection& collection,
                                       int k);

// Best value over `budget` randomly drawn k-point supports with boundary
// points, a lower bound on the optimum.
double KConvexHullValue(const Game& game, int k, int budget,
                        std::uint64_t seed = 0);

// Same, over caller-supplied supports; infeasible ones are skipped.
double KConvexHullValue(const Game& game,
                        const std::vector<std::vector<Belief>>& supports);

// Support sorted lexicographically descending, weights carried along.
InformationStructure CanonicalOrder(const InformationStructure& tau);

}  // namespace persuade

#endif  // PERSUADE_SOLVER_H_
