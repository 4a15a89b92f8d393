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

#include "persuade/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "persuade/errors.h"
#include "persuade/lp.h"
#include "persuade/plausibility.h"

namespace persuade {
namespace {

constexpr double kFacetTol = 1e-8;
constexpr double kMinWeight = 1e-12;

// A convex set of beliefs (given by vertices) on which the sender's value is
// the linear form `sender`.
struct Piece {
  std::vector<Belief> vertices;
  Eigen::VectorXd sender;
};

// Writing y_i = tau_i mu_i, a structure with belief i in piece i is a point
// of the product of the pieces' cones with sum_i y_i = prior, and the sender
// objective sum_i sender_i . y_i is linear. Columns are (piece, vertex).
struct PieceLp {
  Eigen::MatrixXd a;
  Eigen::VectorXd c;
  std::vector<int> owner;
};

PieceLp BuildLp(const std::vector<const Piece*>& pieces, int n) {
  int cols = 0;
  for (const Piece* p : pieces) cols += static_cast<int>(p->vertices.size());
  PieceLp lp;
  lp.a.resize(n, cols);
  lp.c.resize(cols);
  int col = 0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (const Belief& v : pieces[i]->vertices) {
      lp.a.col(col) = v;
      lp.c[col] = pieces[i]->sender.dot(v);
      lp.owner.push_back(static_cast<int>(i));
      ++col;
    }
  }
  return lp;
}

// Among optimal solutions, prefers mass on extreme, low-index-heavy
// vertices so that symmetric optima resolve the same way every run.
double TieBreakScore(const Belief& v) {
  double s = 0.0;
  double w = 1.0;
  for (int j = 0; j < v.size(); ++j) {
    s += w * v[j] * v[j];
    w *= 0.25;
  }
  return s;
}

Eigen::VectorXd SecondaryOptimum(const PieceLp& lp, const Belief& prior,
                                 double target, const Eigen::VectorXd& x0,
                                 int* lps) {
  const int n = static_cast<int>(lp.a.rows());
  const int cols = static_cast<int>(lp.a.cols());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, cols + 1);
  a.topLeftCorner(n, cols) = lp.a;
  a.block(n, 0, 1, cols) = lp.c.transpose();
  a(n, cols) = -1.0;
  Eigen::VectorXd b(n + 1);
  b.head(n) = prior;
  b[n] = target;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cols + 1);
  for (int j = 0; j < cols; ++j) c[j] = TieBreakScore(lp.a.col(j));
  LpResult r = SolveLp(a, b, c);
  ++*lps;
  if (r.status != LpStatus::kOptimal) return x0;
  return r.x.head(cols);
}

InformationStructure Recover(const PieceLp& lp, int num_pieces,
                             const Eigen::VectorXd& x) {
  const int n = static_cast<int>(lp.a.rows());
  std::vector<Eigen::VectorXd> y(num_pieces, Eigen::VectorXd::Zero(n));
  for (int j = 0; j < x.size(); ++j) y[lp.owner[j]] += x[j] * lp.a.col(j);
  InformationStructure tau;
  double total = 0.0;
  for (const Eigen::VectorXd& yi : y) {
    double w = yi.sum();
    if (w <= kMinWeight) continue;
    tau.support.push_back(NormalizeBelief(yi / w));
    tau.weights.push_back(w);
    total += w;
  }
  for (double& w : tau.weights) w /= total;
  return tau;
}

bool LexGreater(const Belief& a, const Belief& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + 1e-9) return true;
    if (a[i] < b[i] - 1e-9) return false;
  }
  return false;
}

// True if canonical structure a should win a tie against b.
bool EncodingGreater(const InformationStructure& a,
                     const InformationStructure& b) {
  for (int i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (LexGreater(a.support[i], b.support[i])) return true;
    if (LexGreater(b.support[i], a.support[i])) return false;
  }
  return false;
}

template <typename Fn>
void ForEachCombination(int n, int r, Fn fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Nondecreasing index sequences of length r over {0..n-1}.
template <typename Fn>
void ForEachMultiset(int n, int r, Fn fn) {
  if (r <= 0 || n <= 0) return;
  std::vector<int> idx(r, 0);
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[i];
  }
}

constexpr double kZeroSnapTol = 1e-12;

void CheckScale(const Game& game, int k) {
  if (k < 1) throw ValidationError("signals: k must be at least 1");
  if (game.num_states() > kMaxStates || game.num_actions() > kMaxActions ||
      k > kMaxSignals) {
    std::ostringstream os;
    os << "instance n=" << game.num_states() << " m=" << game.num_actions()
       << " k=" << k << " exceeds the supported scale (n, m <= "
       << kMaxStates << ", k <= " << kMaxSignals << ")";
    throw ScaleExceeded(os.str());
  }
}

InformationStructure Improve(const Game& game, InformationStructure tau) {
  tau = ReduceAffinelyDependent(game, tau);
  tau = ProjectToBoundary(game, tau);
  return ReduceAffinelyDependent(game, tau);
}

Belief RandomConvexCombination(const std::vector<Belief>& pts,
                               std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  Belief out = Belief::Zero(pts[0].size());
  double total = 0.0;
  for (const Belief& p : pts) {
    double w = exp1(rng);
    out += w * p;
    total += w;
  }
  return out / total;
}

// Parameters t > 0 where mu0 + t d meets a region plane or leaves the simplex.
std::vector<double> RayCrossings(const std::vector<ActionRegion>& regions,
                                 const Belief& mu0, const Eigen::VectorXd& d) {
  double t_max = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] < -1e-15) t_max = std::min(t_max, mu0[i] / -d[i]);
  }
  std::vector<double> out = {t_max};
  for (const ActionRegion& r : regions) {
    for (const Halfspace& h : r.halfspaces) {
      if (h.kind != Halfspace::Kind::kPayoff) continue;
      double rate = h.normal.dot(d);
      if (std::abs(rate) < 1e-14) continue;
      double t = -h.Slack(mu0) / rate;
      if (t > 1e-12 && t < t_max) out.push_back(t);
    }
  }
  return out;
}

double StructureValue(const Game& game, const std::vector<Belief>& support) {
  WeightSolution w = ChoquetWeights(support, game.prior());
  double v = 0.0;
  for (size_t i = 0; i < support.size(); ++i) {
    v += w.weights[i] * SenderValue(game, support[i]);
  }
  return v;
}

}  // namespace

InformationStructure CanonicalOrder(const InformationStructure& tau) {
  std::vector<int> order(tau.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return LexGreater(tau.support[a], tau.support[b]);
  });
  InformationStructure out;
  for (int i : order) {
    out.support.push_back(tau.support[i]);
    out.weights.push_back(tau.weights[i]);
  }
  return out;
}

Solver::Solver(const Game& game)
    : game_(game),
      regions_(BuildRegions(game)),
      facets_(DistinctFacets(regions_)) {}

SolveResult Solver::Solve(int k, const SolveOptions& options) const {
  return SolveAt(game_.prior(), k, options);
}

SolveResult Solver::SolveAt(const Belief& prior, int k,
                            const SolveOptions& options) const {
  const Game game = game_.WithPrior(prior);
  CheckScale(game, k);
  const int n = game.num_states();
  const int m = game.num_actions();
  SolveResult res;
  if (k < 2 || k >= std::min(n, m)) {
    std::ostringstream os;
    os << "k=" << k << " is outside the constrained range 2 <= k < min(n, m)"
       << " = " << std::min(n, m);
    res.warnings.push_back(os.str());
  }

  if (k == 1) {
    res.structure = NoInformation(prior);
    res.value = SenderValue(game, prior);
  } else {
    std::vector<Piece> pieces;
    for (const ActionRegion& r : regions_) {
      if (r.empty) continue;
      pieces.push_back({r.vertices, game.sender_linear().row(r.action)});
    }
    // Two beliefs in one region can always be merged without loss, so only
    // sets of distinct actions are searched.
    const int r = std::min<int>(k, static_cast<int>(pieces.size()));
    struct Candidate {
      std::vector<const Piece*> pieces;
      PieceLp lp;
      LpResult sol;
    };
    std::vector<Candidate> cands;
    double best = -std::numeric_limits<double>::infinity();
    ForEachCombination(static_cast<int>(pieces.size()), r,
                       [&](const std::vector<int>& idx) {
      Candidate c;
      for (int i : idx) c.pieces.push_back(&pieces[i]);
      c.lp = BuildLp(c.pieces, n);
      c.sol = SolveLp(c.lp.a, prior, c.lp.c);
      ++res.iterations;
      if (c.sol.status != LpStatus::kOptimal) return;
      best = std::max(best, c.sol.objective);
      cands.push_back(std::move(c));
    });

    bool have = false;
    for (const Candidate& c : cands) {
      if (c.sol.objective < best - options.tol) continue;
      Eigen::VectorXd x = SecondaryOptimum(c.lp, prior, c.sol.objective - 1e-12,
                                           c.sol.x, &res.iterations);
      InformationStructure tau = Recover(c.lp, c.pieces.size(), x);
      tau = CanonicalOrder(Improve(game, tau));
      double v = EvaluateStructure(game, tau).sender;
      bool better = !have || v > res.value + options.tol ||
                    (v >= res.value - options.tol &&
                     (tau.size() < res.structure.size() ||
                      (tau.size() == res.structure.size() &&
                       EncodingGreater(tau, res.structure))));
      if (better) {
        res.value = v;
        res.structure = tau;
        have = true;
      }
    }
    if (!have) {
      // Cannot happen for a valid game: the regions cover the simplex.
      res.structure = NoInformation(prior);
      res.value = SenderValue(game, prior);
    }
  }

  // Pivoting leaves ~1e-13 residue on coordinates that are zero.
  for (Belief& mu : res.structure.support) {
    mu = (mu.array().abs() < kZeroSnapTol).select(0.0, mu);
    mu /= mu.sum();
  }
  res.structure = CanonicalOrder(res.structure);
  for (const Belief& mu : res.structure.support) {
    int chosen = SenderPreferredAction(game, mu);
    res.support_actions.push_back(chosen);
    bool placed = false;
    for (int pass = 0; pass < 2 && !placed; ++pass) {
      for (const GlobalFacet& g : facets_) {
        for (const auto& [ri, fi] : g.owners) {
          if (pass == 0 && ri != chosen) continue;
          const ActionRegion& region = regions_[ri];
          const Facet& f = region.facets[fi];
          if (std::abs(region.halfspaces[f.tight_constraint].Slack(mu)) >
              kFacetTol) {
            continue;
          }
          if (Classify(region, mu, kFacetTol).kind == MembershipKind::kOutside) {
            continue;
          }
          res.collection.facets.push_back(f);
          placed = true;
          break;
        }
        if (placed) break;
      }
    }
  }

  if (options.restarts > 0) {
    res.restarts = options.restarts;
    res.oracle_gap =
        res.value - KConvexHullValue(game, k, options.restarts, options.seed);
  }
  return res;
}

SolveResult Solve(const Game& game, int k, const SolveOptions& options) {
  CheckScale(game, k);
  return Solver(game).Solve(k, options);
}

std::vector<FacetCollection> EnumerateFacetCollections(const Game& game,
                                                       int k) {
  CheckScale(game, k);
  const int n = game.num_states();
  std::vector<GlobalFacet> facets = DistinctFacets(BuildRegions(game));
  std::vector<FacetCollection> out;
  for (int size = 1; size <= k; ++size) {
    ForEachMultiset(static_cast<int>(facets.size()), size,
                    [&](const std::vector<int>& idx) {
      std::vector<Belief> pts;
      for (int i : idx) {
        for (const Belief& v : facets[i].facet.vertices) pts.push_back(v);
      }
      Eigen::MatrixXd a(n, pts.size());
      for (size_t j = 0; j < pts.size(); ++j) a.col(j) = pts[j];
      if (!LpFeasible(a, game.prior())) return;
      FacetCollection c;
      for (int i : idx) c.facets.push_back(facets[i].facet);
      out.push_back(std::move(c));
    });
  }
  return out;
}

CollectionOptimum MaximizeOnCollection(const Game& game,
                                       const FacetCollection& collection,
                                       int k) {
  CheckScale(game, k);
  if (collection.size() == 0 || collection.size() > k) {
    throw ValidationError("collection must hold between 1 and k facets");
  }
  const int n = game.num_states();
  std::vector<ActionRegion> regions = BuildRegions(game);
  // Split each facet by the sender-preferred action.
  std::vector<std::vector<Piece>> options;
  for (const Facet& f : collection.facets) {
    const ActionRegion& parent = regions.at(f.parent_action);
    const Halfspace& plane = parent.halfspaces.at(f.tight_constraint);
    std::vector<Piece> per_facet;
    for (const ActionRegion& r : regions) {
      if (r.empty) continue;
      std::vector<Halfspace> hs = parent.halfspaces;
      hs.insert(hs.end(), r.halfspaces.begin(), r.halfspaces.end());
      std::vector<Belief> verts = PolytopeVertices(hs, {plane}, n);
      if (verts.empty()) continue;
      per_facet.push_back({verts, game.sender_linear().row(r.action)});
    }
    options.push_back(std::move(per_facet));
  }

  const int slots = collection.size();
  std::vector<int> choice(slots, 0);
  bool found = false;
  double best = 0.0;
  PieceLp best_lp;
  Eigen::VectorXd best_x;
  while (true) {
    bool valid = true;
    for (int i = 0; i < slots; ++i) {
      if (options[i].empty()) valid = false;
    }
    if (!valid) break;
    std::vector<const Piece*> chosen;
    for (int i = 0; i < slots; ++i) chosen.push_back(&options[i][choice[i]]);
    PieceLp lp = BuildLp(chosen, n);
    LpResult sol = SolveLp(lp.a, game.prior(), lp.c);
    if (sol.status == LpStatus::kOptimal &&
        (!found || sol.objective > best + 1e-12)) {
      found = true;
      best = sol.objective;
      best_lp = lp;
      best_x = sol.x;
    }
    int i = slots - 1;
    while (i >= 0 && choice[i] + 1 == static_cast<int>(options[i].size())) {
      choice[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++choice[i];
  }
  if (!found) throw Infeasible("prior is not reachable from this collection");
  InformationStructure tau = Recover(best_lp, slots, best_x);
  tau = CanonicalOrder(ReduceAffinelyDependent(game, tau));
  return {EvaluateStructure(game, tau).sender, tau};
}

double KConvexHullValue(const Game& game, int k, int budget,
                        std::uint64_t seed) {
  CheckScale(game, k);
  if (budget < 1) throw ValidationError("budget must be at least 1");
  const Belief& mu0 = game.prior();
  double best = SenderValue(game, mu0);
  if (k == 1) return best;
  std::vector<ActionRegion> regions = BuildRegions(game);
  std::vector<GlobalFacet> facets = DistinctFacets(regions);
  std::vector<Belief> vertices;
  for (const ActionRegion& r : regions) {
    for (const Belief& v : r.vertices) vertices.push_back(v);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&]() -> Belief {
    if (facets.empty() || unit(rng) < 0.25) {
      return vertices[rng() % vertices.size()];
    }
    const GlobalFacet& g = facets[rng() % facets.size()];
    return RandomConvexCombination(g.facet.vertices, rng);
  };
  for (int b = 0; b < budget; ++b) {
    std::vector<Belief> support;
    for (int i = 0; i < k - 1; ++i) support.push_back(draw());
    // The last belief sits on the far side of the prior from a random point
    // of the others' hull, so the prior is inside the full hull.
    Belief q = RandomConvexCombination(support, rng);
    Eigen::VectorXd d = mu0 - q;
    if (d.norm() < 1e-12) continue;
    for (double t : RayCrossings(regions, mu0, d)) {
      std::vector<Belief> full = support;
      full.push_back(NormalizeBelief(mu0 + t * d));
      try {
        best = std::max(best, StructureValue(game, full));
      } catch (const Error&) {
        // Dependent or infeasible draw.
      }
    }
  }
  return best;
}

double KConvexHullValue(const Game& game,
                        const std::vector<std::vector<Belief>>& supports) {
  double best = -std::numeric_limits<double>::infinity();
  for (const std::vector<Belief>& s : supports) {
    try {
      best = std::max(best, StructureValue(game, s));
    } catch (const Error&) {
    }
  }
  return best;
}

}  // namespace persuade
