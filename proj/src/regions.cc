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
#include <cmath>
#include <sstream>

#include "persuade/errors.h"

namespace persuade {
namespace {

bool Near(const Belief& a, const Belief& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

void AddUnique(std::vector<Belief>* points, const Belief& p) {
  for (const Belief& q : *points) {
    if (Near(p, q, kVertexDedupTol)) return;
  }
  points->push_back(p);
}

// Calls `fn` on every r-subset of {0..n-1}, in lexicographic order.
template <typename Fn>
void ForEachSubset(int n, int r, Fn fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Halfspace> SimplexFaces(int n) {
  std::vector<Halfspace> out;
  for (int i = 0; i < n; ++i) {
    Halfspace h;
    h.normal = Eigen::VectorXd::Unit(n, i);
    h.offset = 0.0;
    h.kind = Halfspace::Kind::kSimplexFace;
    h.other = i;
    out.push_back(h);
  }
  return out;
}

// Payoff constraints (row_a - row_b) . mu >= 0 for every b != a. Differences
// that are constant on the simplex carry no geometry; a negative constant
// makes the region empty.
std::vector<Halfspace> DominanceConstraints(const Eigen::MatrixXd& payoff,
                                            int a, bool* empty) {
  std::vector<Halfspace> out;
  for (int b = 0; b < payoff.rows(); ++b) {
    if (b == a) continue;
    Eigen::VectorXd d = (payoff.row(a) - payoff.row(b)).transpose();
    if (d.maxCoeff() - d.minCoeff() <= 1e-12) {
      if (d[0] < -kIndifferenceTol) *empty = true;
      continue;
    }
    Halfspace h;
    h.normal = d;
    h.offset = 0.0;
    h.kind = Halfspace::Kind::kPayoff;
    h.other = b;
    out.push_back(h);
  }
  return out;
}

Belief Centroid(const std::vector<Belief>& points) {
  Belief c = Belief::Zero(points[0].size());
  for (const Belief& p : points) c += p;
  return c / static_cast<double>(points.size());
}

}  // namespace

int AffineDimension(const std::vector<Belief>& points, double tol) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const int n = static_cast<int>(points[0].size());
  Eigen::MatrixXd diffs(n, points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) {
    diffs.col(i - 1) = points[i] - points[0];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  const Eigen::VectorXd& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] > tol) ++rank;
  }
  return rank;
}

std::vector<Belief> PolytopeVertices(const std::vector<Halfspace>& halfspaces,
                                     const std::vector<Halfspace>& equalities,
                                     int num_states) {
  const int n = num_states;
  std::vector<const Halfspace*> planes;
  for (const Halfspace& e : equalities) planes.push_back(&e);
  for (const Halfspace& h : halfspaces) planes.push_back(&h);
  std::vector<Belief> out;
  Eigen::MatrixXd sys(n, n);
  Eigen::VectorXd rhs(n);
  ForEachSubset(static_cast<int>(planes.size()), n - 1,
                [&](const std::vector<int>& idx) {
    for (int r = 0; r < n - 1; ++r) {
      sys.row(r) = planes[idx[r]]->normal.transpose();
      rhs[r] = planes[idx[r]]->offset;
    }
    sys.row(n - 1).setOnes();
    rhs[n - 1] = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    if (!lu.isInvertible()) return;
    Belief x = lu.solve(rhs);
    if (x.minCoeff() < -kVertexFeasTol) return;
    for (const Halfspace& h : halfspaces) {
      if (h.Slack(x) < -kVertexFeasTol) return;
    }
    for (const Halfspace& e : equalities) {
      if (std::abs(e.Slack(x)) > kVertexFeasTol) return;
    }
    for (int i = 0; i < n; ++i) {
      if (std::abs(x[i]) < 1e-14) x[i] = 0.0;
    }
    AddUnique(&out, x);
  });
  return out;
}

ActionRegion BuildRegion(const Game& game, int action) {
  const int n = game.num_states();
  ActionRegion region;
  region.action = action;
  region.halfspaces = SimplexFaces(n);
  bool empty = false;
  for (Halfspace& h :
       DominanceConstraints(game.receiver_payoffs(), action, &empty)) {
    region.halfspaces.push_back(std::move(h));
  }
  if (!empty) region.vertices = PolytopeVertices(region.halfspaces, {}, n);
  region.empty = region.vertices.empty();
  region.dimension = AffineDimension(region.vertices);
  if (region.full_dimensional()) region.facets = EnumerateFacets(region);
  return region;
}

std::vector<ActionRegion> BuildRegions(const Game& game) {
  std::vector<ActionRegion> out;
  for (int a = 0; a < game.num_actions(); ++a) {
    out.push_back(BuildRegion(game, a));
  }
  return out;
}

std::vector<Belief> EnumerateVertices(const ActionRegion& region) {
  if (region.halfspaces.empty()) return {};
  return PolytopeVertices(region.halfspaces, {},
                          static_cast<int>(region.halfspaces[0].normal.size()));
}

std::vector<Facet> EnumerateFacets(const ActionRegion& region) {
  if (!region.full_dimensional()) {
    std::ostringstream os;
    os << "region of action " << region.action << " has dimension "
       << region.dimension;
    throw DegenerateRegion(os.str());
  }
  std::vector<Facet> out;
  for (size_t h = 0; h < region.halfspaces.size(); ++h) {
    Facet f;
    f.parent_action = region.action;
    f.tight_constraint = static_cast<int>(h);
    for (const Belief& v : region.vertices) {
      if (std::abs(region.halfspaces[h].Slack(v)) <= kVertexFeasTol) {
        f.vertices.push_back(v);
      }
    }
    if (AffineDimension(f.vertices) != region.dimension - 1) continue;
    bool duplicate = false;
    for (const Facet& g : out) {
      if (SameVertexSet(g.vertices, f.vertices)) duplicate = true;
    }
    if (!duplicate) out.push_back(std::move(f));
  }
  return out;
}

Membership Classify(const ActionRegion& region, const Belief& belief,
                    double tol) {
  Membership m;
  if (region.empty) return m;
  bool tight = false;
  for (const Halfspace& h : region.halfspaces) {
    double s = h.Slack(belief);
    if (s < -tol) return m;
    if (s <= tol) tight = true;
  }
  if (!tight && region.full_dimensional()) {
    m.kind = MembershipKind::kInterior;
    return m;
  }
  m.kind = MembershipKind::kBoundary;
  for (size_t f = 0; f < region.facets.size(); ++f) {
    const Halfspace& h = region.halfspaces[region.facets[f].tight_constraint];
    if (std::abs(h.Slack(belief)) <= tol) m.facets.push_back(static_cast<int>(f));
  }
  return m;
}

std::vector<SenderSubzone> SenderSubzones(const Game& game,
                                          const ActionRegion& region) {
  std::vector<SenderSubzone> out;
  if (region.empty) return out;
  const int n = game.num_states();
  const Eigen::MatrixXd& sender = game.sender_linear();
  for (int chosen = 0; chosen < game.num_actions(); ++chosen) {
    std::vector<Halfspace> hs = region.halfspaces;
    if (chosen != region.action) {
      bool empty = false;
      for (Halfspace& h :
           DominanceConstraints(game.receiver_payoffs(), chosen, &empty)) {
        hs.push_back(std::move(h));
      }
      if (empty) continue;
    }
    std::vector<Belief> piece = PolytopeVertices(hs, {}, n);
    if (piece.empty()) continue;
    // Actions receiver-optimal on the whole piece compete for the sender.
    bool never_chosen = false;
    for (int b = 0; b < game.num_actions(); ++b) {
      if (b == chosen) continue;
      bool everywhere = true;
      for (const Belief& v : piece) {
        Eigen::VectorXd pay = game.receiver_payoffs() * v;
        if (pay[b] < pay.maxCoeff() - kIndifferenceTol) everywhere = false;
      }
      if (!everywhere) continue;
      Eigen::VectorXd d = (sender.row(chosen) - sender.row(b)).transpose();
      if (d.maxCoeff() - d.minCoeff() <= 1e-12) {
        if (d[0] < -1e-12 || (std::abs(d[0]) <= 1e-12 && b < chosen)) {
          never_chosen = true;
        }
        continue;
      }
      Halfspace h;
      h.normal = d;
      h.offset = 0.0;
      h.kind = Halfspace::Kind::kPayoff;
      h.other = b;
      hs.push_back(h);
    }
    if (never_chosen) continue;
    std::vector<Belief> verts = PolytopeVertices(hs, {}, n);
    if (verts.empty()) continue;
    if (SenderPreferredAction(game, Centroid(verts)) != chosen) continue;
    SenderSubzone z;
    z.parent_action = region.action;
    z.chosen_action = chosen;
    z.halfspaces = std::move(hs);
    z.vertices = std::move(verts);
    out.push_back(std::move(z));
  }
  return out;
}

bool SameVertexSet(const std::vector<Belief>& a, const std::vector<Belief>& b,
                   double tol) {
  if (a.size() != b.size()) return false;
  for (const Belief& p : a) {
    bool found = false;
    for (const Belief& q : b) {
      if (Near(p, q, tol)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<GlobalFacet> DistinctFacets(
    const std::vector<ActionRegion>& regions) {
  std::vector<GlobalFacet> out;
  for (size_t r = 0; r < regions.size(); ++r) {
    for (size_t f = 0; f < regions[r].facets.size(); ++f) {
      const Facet& facet = regions[r].facets[f];
      bool merged = false;
      for (GlobalFacet& g : out) {
        if (SameVertexSet(g.facet.vertices, facet.vertices)) {
          g.owners.emplace_back(static_cast<int>(r), static_cast<int>(f));
          merged = true;
          break;
        }
      }
      if (!merged) {
        out.push_back({facet, {{static_cast<int>(r), static_cast<int>(f)}}});
      }
    }
  }
  return out;
}

std::string RegionsCsv(const Game& game,
                       const std::vector<ActionRegion>& regions) {
  std::ostringstream os;
  os.precision(12);
  os << "action,kind,facet,vertex";
  for (const std::string& s : game.states()) os << ",mu_" << s;
  os << "\n";
  auto write_point = [&](const Belief& p) {
    for (int i = 0; i < p.size(); ++i) os << "," << p[i];
    os << "\n";
  };
  for (const ActionRegion& r : regions) {
    const std::string& name = game.actions()[r.action];
    for (size_t v = 0; v < r.vertices.size(); ++v) {
      os << name << ",vertex,-1," << v;
      write_point(r.vertices[v]);
    }
    for (size_t f = 0; f < r.facets.size(); ++f) {
      for (size_t v = 0; v < r.facets[f].vertices.size(); ++v) {
        os << name << ",facet," << f << "," << v;
        write_point(r.facets[f].vertices[v]);
      }
    }
  }
  return os.str();
}

}  // namespace persuade
