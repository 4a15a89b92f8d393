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

#include "persuade/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "persuade/errors.h"

namespace persuade {
namespace {

constexpr double kTie = 1e-9;

// Sender payoff of action a straight from the game's stored spec.
double RawSender(const Game& game, int a, const Belief& mu) {
  const Eigen::MatrixXd& s = game.sender_spec();
  const int n = game.num_states();
  double v = s.row(a).head(n).dot(mu);
  if (game.sender_mode() == SenderMode::kAffine) v += s(a, n);
  return v;
}

double OracleValue(const Game& game, const Belief& mu) {
  Eigen::VectorXd r = game.receiver_payoffs() * mu;
  double top = r.maxCoeff();
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < r.size(); ++a) {
    if (r[a] >= top - kTie) best = std::max(best, RawSender(game, a, mu));
  }
  return best;
}

// On a simplex face or where two actions tie for the receiver's best.
bool OnBoundary(const Game& game, const Belief& mu) {
  if (mu.minCoeff() <= 1e-12) return true;
  Eigen::VectorXd r = game.receiver_payoffs() * mu;
  double top = r.maxCoeff();
  int count = 0;
  for (int a = 0; a < r.size(); ++a) {
    if (r[a] >= top - kTie) ++count;
  }
  return count >= 2;
}

bool BothOptimal(const Game& game, const Belief& mu, int a, int b) {
  Eigen::VectorXd r = game.receiver_payoffs() * mu;
  double top = r.maxCoeff();
  return r[a] >= top - kTie && r[b] >= top - kTie;
}

class CandidateSet {
 public:
  void Add(const Belief& mu) {
    if (mu.minCoeff() < -1e-12) return;
    Belief p = mu.cwiseMax(0.0);
    p /= p.sum();
    std::vector<long long> key(p.size());
    for (int i = 0; i < p.size(); ++i) key[i] = std::llround(p[i] * 1e9);
    if (seen_.insert(key).second) points_.push_back(p);
  }
  const std::vector<Belief>& points() const { return points_; }

 private:
  std::set<std::vector<long long>> seen_;
  std::vector<Belief> points_;
};

void ForEachComposition(int n, int total, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    ForEachComposition(n, total - v, cur, f);
    cur.pop_back();
  }
}

std::vector<std::pair<int, int>> ActivePairs(const Game& game) {
  std::vector<std::pair<int, int>> out;
  const Eigen::MatrixXd& u = game.receiver_payoffs();
  for (int a = 0; a < game.num_actions(); ++a) {
    for (int b = a + 1; b < game.num_actions(); ++b) {
      Eigen::VectorXd d = (u.row(a) - u.row(b)).transpose();
      if (d.maxCoeff() - d.minCoeff() > 1e-12) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Belief> BuildCandidates(const Game& game, int resolution) {
  const int n = game.num_states();
  const Eigen::MatrixXd& u = game.receiver_payoffs();
  auto pairs = ActivePairs(game);
  CandidateSet set;

  std::vector<int> cur;
  std::vector<Belief> lattice;
  ForEachComposition(n, resolution, cur, [&](const std::vector<int>& c) {
    Belief mu(n);
    for (int i = 0; i < n; ++i) mu[i] = static_cast<double>(c[i]) / resolution;
    lattice.push_back(mu);
  });
  for (const Belief& mu : lattice) {
    if (OnBoundary(game, mu)) set.Add(mu);
  }

  // Lattice lines L + t (e_q - e_p) starting on the face mu_q = 0.
  for (const Belief& l : lattice) {
    for (int q = 0; q < n; ++q) {
      if (l[q] != 0.0) continue;
      for (int p = 0; p < n; ++p) {
        if (p == q || l[p] == 0.0) continue;
        for (auto [a, b] : pairs) {
          Eigen::VectorXd d = (u.row(a) - u.row(b)).transpose();
          double rate = d[q] - d[p];
          if (std::abs(rate) < 1e-14) continue;
          double t = -d.dot(l) / rate;
          if (t < 0.0 || t > l[p]) continue;
          Belief mu = l;
          mu[q] += t;
          mu[p] -= t;
          if (BothOptimal(game, mu, a, b)) set.Add(mu);
        }
      }
    }
  }

  // Vertices of every region: n - 1 planes among the faces and the
  // indifference planes, plus the simplex plane.
  std::vector<Eigen::VectorXd> planes;
  std::vector<std::pair<int, int>> plane_pair;
  for (int i = 0; i < n; ++i) {
    planes.push_back(Eigen::VectorXd::Unit(n, i));
    plane_pair.emplace_back(-1, -1);
  }
  for (auto [a, b] : pairs) {
    planes.push_back((u.row(a) - u.row(b)).transpose());
    plane_pair.emplace_back(a, b);
  }
  const int np = static_cast<int>(planes.size());
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == n - 1) {
      Eigen::MatrixXd m(n, n);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
      for (int r = 0; r < n - 1; ++r) m.row(r) = planes[pick[r]].transpose();
      m.row(n - 1).setOnes();
      rhs[n - 1] = 1.0;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
      if (!lu.isInvertible()) return;
      Belief mu = lu.solve(rhs);
      if (mu.minCoeff() < -1e-10) return;
      for (int idx : pick) {
        auto [a, b] = plane_pair[idx];
        if (a >= 0 && !BothOptimal(game, mu, a, b)) return;
      }
      set.Add(mu);
      return;
    }
    for (int i = start; i < np; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return set.points();
}

// Boundary points on the ray mu0 + t d, t > 0.
std::vector<Belief> RayHits(const Game& game, const Belief& mu0,
                            const Eigen::VectorXd& d,
                            const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Belief> out;
  double t_max = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] < -1e-15) t_max = std::min(t_max, mu0[i] / -d[i]);
  }
  if (!std::isfinite(t_max)) return out;
  out.push_back(mu0 + t_max * d);
  const Eigen::MatrixXd& u = game.receiver_payoffs();
  for (auto [a, b] : pairs) {
    Eigen::VectorXd diff = (u.row(a) - u.row(b)).transpose();
    double rate = diff.dot(d);
    if (std::abs(rate) < 1e-14) continue;
    double t = -diff.dot(mu0) / rate;
    if (t <= 1e-12 || t > t_max) continue;
    Belief mu = mu0 + t * d;
    if (BothOptimal(game, mu, a, b)) out.push_back(mu);
  }
  for (Belief& mu : out) {
    mu = mu.cwiseMax(0.0);
    mu /= mu.sum();
  }
  return out;
}

}  // namespace

OracleResult BruteForceSolve(const Game& game, int k, int resolution) {
  const int n = game.num_states();
  if (n > 4 || k > 3 || resolution > 80) {
    std::ostringstream os;
    os << "oracle limited to n <= 4, k <= 3, resolution <= 80 (got n=" << n
       << ", k=" << k << ", resolution=" << resolution << ")";
    throw ScaleExceeded(os.str());
  }
  if (k < 1 || resolution < 1) {
    throw ValidationError("oracle needs k >= 1 and resolution >= 1");
  }
  const Belief& mu0 = game.prior();
  OracleResult best;
  best.value = OracleValue(game, mu0);
  best.structure = {{mu0}, {1.0}};
  if (k == 1) return best;

  std::vector<Belief> cands = BuildCandidates(game, resolution);
  best.candidates = static_cast<int>(cands.size());
  auto pairs = ActivePairs(game);
  auto consider = [&](const std::vector<Belief>& pts,
                      const std::vector<double>& w) {
    double v = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (w[i] < -1e-12) return;
      v += w[i] * OracleValue(game, pts[i]);
    }
    if (v > best.value + 1e-12) {
      best.value = v;
      best.structure.support.clear();
      best.structure.weights.clear();
      for (size_t i = 0; i < pts.size(); ++i) {
        if (w[i] <= 1e-12) continue;
        best.structure.support.push_back(pts[i]);
        best.structure.weights.push_back(w[i]);
      }
    }
  };

  // Two-point structures: p, then mu0 + t (mu0 - p); weight of p is t/(1+t).
  auto through_prior = [&](const Belief& q,
                           const std::function<void(const Belief&, double)>&
                               emit) {
    Eigen::VectorXd d = mu0 - q;
    if (d.norm() < 1e-12) return;
    for (const Belief& hit : RayHits(game, mu0, d, pairs)) {
      // hit = mu0 + t d; recover t from the largest coordinate of d.
      int j = 0;
      d.cwiseAbs().maxCoeff(&j);
      double t = (hit[j] - mu0[j]) / d[j];
      if (!(t > 0.0)) continue;
      emit(hit, t / (1.0 + t));
    }
  };

  if (k == 2) {
    for (const Belief& p : cands) {
      through_prior(p, [&](const Belief& hit, double wp) {
        consider({p, hit}, {wp, 1.0 - wp});
      });
    }
    return best;
  }

  // k == 3.
  if (n == 3) {
    const size_t c = cands.size();
    if (static_cast<double>(c) * c * c / 6.0 > 5e7) {
      throw ScaleExceeded("too many candidate triples; lower the resolution");
    }
    Eigen::Matrix3d m;
    for (size_t i = 0; i < c; ++i) {
      for (size_t j = i + 1; j < c; ++j) {
        for (size_t l = j + 1; l < c; ++l) {
          m.col(0) = cands[i];
          m.col(1) = cands[j];
          m.col(2) = cands[l];
          Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
          if (!lu.isInvertible()) continue;
          Eigen::Vector3d w = lu.solve(mu0);
          consider({cands[i], cands[j], cands[l]}, {w[0], w[1], w[2]});
        }
      }
    }
  } else {
    for (size_t i = 0; i < cands.size(); ++i) {
      for (size_t j = i + 1; j < cands.size(); ++j) {
        for (double s : {0.25, 0.5, 0.75}) {
          Belief q = (1.0 - s) * cands[i] + s * cands[j];
          through_prior(q, [&](const Belief& hit, double wq) {
            consider({cands[i], cands[j], hit},
                     {wq * (1.0 - s), wq * s, 1.0 - wq});
          });
        }
      }
    }
  }
  // Two-point structures remain admissible with three signals.
  for (const Belief& p : cands) {
    through_prior(p, [&](const Belief& hit, double wp) {
      consider({p, hit}, {wp, 1.0 - wp});
    });
  }
  return best;
}

double OracleGapBound(const Game& game, int resolution) {
  double spread = 0.0;
  const int n = game.num_states();
  for (int a = 0; a < game.num_actions(); ++a) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (int w = 0; w < n; ++w) {
      double v = RawSender(game, a, Belief(Eigen::VectorXd::Unit(n, w)));
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    spread = std::max({spread, hi - lo, std::abs(hi), std::abs(lo)});
  }
  return 2.0 * spread / resolution;
}

double BruteForcePartition(const ContinuumProblem& problem, int k,
                           int resolution) {
  if (k > 3) throw ScaleExceeded("partition oracle limited to k <= 3");
  if (k < 1 || resolution < 2) {
    throw ValidationError("partition oracle needs k >= 1, resolution >= 2");
  }
  const PriorDistribution& f = *problem.prior;
  auto integral = [&](double a, double b) {
    const int steps = 2000;
    double h = (b - a) / steps;
    double s = f.Cdf(a) + f.Cdf(b);
    for (int i = 1; i < steps; ++i) {
      s += (i % 2 == 1 ? 4.0 : 2.0) * f.Cdf(a + i * h);
    }
    return s * h / 3.0;
  };
  auto action = [&](double mean) {
    const auto& g = problem.cutoffs;
    for (size_t j = 0; j < g.size(); ++j) {
      if (std::abs(mean - g[j]) <= 1e-9) {
        return problem.utilities[j] >= problem.utilities[j + 1]
                   ? problem.utilities[j]
                   : problem.utilities[j + 1];
      }
    }
    size_t idx = 0;
    while (idx < g.size() && mean >= g[idx]) ++idx;
    return problem.utilities[idx];
  };
  const int r = resolution;
  std::vector<std::vector<double>> cell(r + 1, std::vector<double>(r + 1, 0.0));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      double a = static_cast<double>(i) / r;
      double b = static_cast<double>(j) / r;
      double mass = f.Cdf(b) - f.Cdf(a);
      if (mass <= 1e-15) continue;
      double mean = (b * f.Cdf(b) - a * f.Cdf(a) - integral(a, b)) / mass;
      cell[i][j] = mass * action(mean);
    }
  }
  double best = cell[0][r];
  if (k >= 2) {
    for (int i = 1; i < r; ++i) best = std::max(best, cell[0][i] + cell[i][r]);
  }
  if (k >= 3) {
    for (int i = 1; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        best = std::max(best, cell[0][i] + cell[i][j] + cell[j][r]);
      }
    }
  }
  return best;
}

}  // namespace persuade
