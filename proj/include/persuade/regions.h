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

#ifndef PERSUADE_REGIONS_H_
#define PERSUADE_REGIONS_H_

#include <string>
#include <utility>
#include <vector>

#include "persuade/game.h"

namespace persuade {

inline constexpr double kVertexFeasTol = 1e-9;
inline constexpr double kVertexDedupTol = 1e-8;

// normal . mu >= offset.
struct Halfspace {
  enum class Kind { kSimplexFace, kPayoff };
  Eigen::VectorXd normal;
  double offset = 0.0;
  Kind kind = Kind::kSimplexFace;
  // State index for simplex faces, competing action for payoff constraints.
  int other = -1;

  double Slack(const Belief& mu) const { return normal.dot(mu) - offset; }
};

struct Facet {
  int parent_action = -1;
  // Index into the parent region's halfspaces.
  int tight_constraint = -1;
  std::vector<Belief> vertices;
};

struct ActionRegion {
  int action = -1;
  std::vector<Halfspace> halfspaces;
  std::vector<Belief> vertices;
  std::vector<Facet> facets;
  bool empty = false;
  // Affine dimension of the vertex set, -1 when empty.
  int dimension = -1;

  bool full_dimensional() const {
    return !empty && !halfspaces.empty() &&
           dimension == halfspaces[0].normal.size() - 1;
  }
};

struct SenderSubzone {
  int parent_action = -1;
  int chosen_action = -1;
  std::vector<Halfspace> halfspaces;
  std::vector<Belief> vertices;
};

// Affine dimension of a point set (rank of differences, singular value
// threshold `tol`).
int AffineDimension(const std::vector<Belief>& points, double tol = 1e-9);

// Vertices of {mu in simplex : h.Slack(mu) >= 0 for all h, and
// e.Slack(mu) == 0 for all e in `equalities`} by brute-force intersection of
// (n-1)-subsets of the constraint planes with the plane sum(mu) = 1.
std::vector<Belief> PolytopeVertices(const std::vector<Halfspace>& halfspaces,
                                     const std::vector<Halfspace>& equalities,
                                     int num_states);

// The receiver-optimal region of every action, vertices and facets filled.
std::vector<ActionRegion> BuildRegions(const Game& game);
ActionRegion BuildRegion(const Game& game, int action);

std::vector<Belief> EnumerateVertices(const ActionRegion& region);

// Throws DegenerateRegion if the region is empty or not full dimensional.
std::vector<Facet> EnumerateFacets(const ActionRegion& region);

enum class MembershipKind { kInterior, kBoundary, kOutside };

struct Membership {
  MembershipKind kind = MembershipKind::kOutside;
  // Indices into region.facets of the facets containing the belief.
  std::vector<int> facets;
};

Membership Classify(const ActionRegion& region, const Belief& belief,
                    double tol = kIndifferenceTol);

std::vector<SenderSubzone> SenderSubzones(const Game& game,
                                          const ActionRegion& region);

// A facet of some region, identified geometrically across regions.
struct GlobalFacet {
  Facet facet;
  // Every (region, facet index) pair with the same vertex set.
  std::vector<std::pair<int, int>> owners;
};

std::vector<GlobalFacet> DistinctFacets(const std::vector<ActionRegion>& regions);

bool SameVertexSet(const std::vector<Belief>& a, const std::vector<Belief>& b,
                   double tol = kVertexDedupTol);

// CSV lines "action,kind,index,vertex,coord_0,...": one row per region vertex
// and per facet vertex.
std::string RegionsCsv(const Game& game,
                       const std::vector<ActionRegion>& regions);

}  // namespace persuade

#endif  // PERSUADE_REGIONS_H_
