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

#include <cmath>
#include <limits>
#include <sstream>

#include "persuade/errors.h"
#include "persuade/regions.h"

namespace persuade {
namespace {

constexpr double kDuplicateTol = 1e-10;
constexpr double kRayTol = 1e-12;

double Value(const Game& game, const InformationStructure& tau) {
  double v = 0.0;
  for (int i = 0; i < tau.size(); ++i) {
    v += tau.weights[i] * SenderValue(game, tau.support[i]);
  }
  return v;
}

InformationStructure DropZeroWeights(const InformationStructure& tau) {
  InformationStructure out;
  for (int i = 0; i < tau.size(); ++i) {
    if (tau.weights[i] > 0.0) {
      out.support.push_back(tau.support[i]);
      out.weights.push_back(tau.weights[i]);
    }
  }
  return out;
}

InformationStructure MergeDuplicates(const InformationStructure& tau) {
  InformationStructure out;
  for (int i = 0; i < tau.size(); ++i) {
    bool merged = false;
    for (int j = 0; j < out.size(); ++j) {
      if ((out.support[j] - tau.support[i]).cwiseAbs().maxCoeff() <=
          kDuplicateTol) {
        out.weights[j] += tau.weights[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.support.push_back(tau.support[i]);
      out.weights.push_back(tau.weights[i]);
    }
  }
  return out;
}

// Interval [lo, hi] of t with mu0 + t d inside the region; lo > hi if none.
std::pair<double, double> ClipRay(const ActionRegion& region, const Belief& mu0,
                                  const Eigen::VectorXd& d) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const Halfspace& h : region.halfspaces) {
    double base = h.Slack(mu0);
    double rate = h.normal.dot(d);
    if (std::abs(rate) <= kRayTol) {
      if (base < -kIndifferenceTol) return {1.0, 0.0};
      continue;
    }
    double t = -base / rate;
    if (rate > 0) {
      lo = std::max(lo, t);
    } else {
      hi = std::min(hi, t);
    }
  }
  return {lo, hi};
}

// Moves belief k to mu0 + t (mu_k - mu0); the others keep their relative
// weights.
InformationStructure MoveAlongRay(const InformationStructure& tau,
                                  const Belief& mu0, int k, double t) {
  InformationStructure out = tau;
  const double tk = tau.weights[k];
  const double denom = t + tk * (1.0 - t);
  for (int i = 0; i < tau.size(); ++i) {
    out.weights[i] = i == k ? tk / denom : tau.weights[i] * t / denom;
  }
  out.support[k] = NormalizeBelief(mu0 + t * (tau.support[k] - mu0));
  return out;
}

}  // namespace

bool IsAffinelyIndependent(const std::vector<Belief>& support) {
  if (support.empty()) return false;
  if (support.size() == 1) return true;
  const int n = static_cast<int>(support[0].size());
  if (static_cast<int>(support.size()) > n) return false;
  Eigen::MatrixXd diffs(n, support.size() - 1);
  for (size_t i = 1; i < support.size(); ++i) {
    diffs.col(i - 1) = support[i] - support[0];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  return svd.singularValues().minCoeff() > kAffineIndependenceTol;
}

WeightSolution ChoquetWeights(const std::vector<Belief>& support,
                              const Belief& prior) {
  if (!IsAffinelyIndependent(support)) {
    throw NotAffinelyIndependent("support is affinely dependent");
  }
  const int n = static_cast<int>(prior.size());
  const int s = static_cast<int>(support.size());
  Eigen::MatrixXd t(n + 1, s);
  for (int i = 0; i < s; ++i) {
    t.col(i).head(n) = support[i];
    t(n, i) = 1.0;
  }
  Eigen::VectorXd rhs(n + 1);
  rhs.head(n) = prior;
  rhs[n] = 1.0;
  Eigen::VectorXd w = t.colPivHouseholderQr().solve(rhs);
  WeightSolution out;
  out.residual = (t * w - rhs).norm();
  if (out.residual >= kWeightResidualTol || w.minCoeff() < -kNegativeWeightTol) {
    std::ostringstream os;
    os << "prior outside the support hull (residual " << out.residual
       << ", min weight " << w.minCoeff() << ")";
    throw Infeasible(os.str());
  }
  w = w.cwiseMax(0.0);
  w /= w.sum();
  out.weights.assign(w.data(), w.data() + w.size());
  return out;
}

InformationStructure ProjectToBoundary(const Game& game,
                                       const InformationStructure& tau) {
  CheckBayesPlausible(tau, game.prior());
  const Belief& mu0 = game.prior();
  InformationStructure cur = tau;
  for (int k = 0; k < cur.size(); ++k) {
    if (cur.weights[k] <= 0.0) continue;
    const Belief& mu = cur.support[k];
    Eigen::VectorXd d = mu - mu0;
    if (d.cwiseAbs().maxCoeff() <= kDuplicateTol) continue;
    std::vector<int> opt = OptimalActionSet(game, mu);
    if (opt.size() != 1) continue;
    ActionRegion region = BuildRegion(game, opt[0]);
    if (Classify(region, mu).kind != MembershipKind::kInterior) continue;
    auto [lo, hi] = ClipRay(region, mu0, d);
    lo = std::max(lo, 0.0);
    if (!(lo <= 1.0 && hi >= 1.0)) continue;
    const double before = Value(game, cur);
    InformationStructure out = MoveAlongRay(cur, mu0, k, hi);
    InformationStructure in = MoveAlongRay(cur, mu0, k, lo);
    const double v_out = Value(game, out);
    const double v_in = Value(game, in);
    // Prefer the larger gain; on a tie, the point closer to the prior.
    InformationStructure& pick = v_out > v_in + 1e-12 ? out : in;
    if (std::max(v_out, v_in) < before - 1e-12) continue;
    cur = pick;
  }
  return MergeDuplicates(DropZeroWeights(cur));
}

InformationStructure ReduceAffinelyDependent(const Game& game,
                                             const InformationStructure& tau) {
  CheckBayesPlausible(tau, game.prior());
  InformationStructure cur = MergeDuplicates(DropZeroWeights(tau));
  const int n = game.num_states();
  while (!IsAffinelyIndependent(cur.support)) {
    const int s = cur.size();
    Eigen::MatrixXd t(n + 1, s);
    for (int i = 0; i < s; ++i) {
      t.col(i).head(n) = cur.support[i];
      t(n, i) = 1.0;
    }
    // Null direction: sum_i lambda_i mu_i = 0 and sum_i lambda_i = 0.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeFullV);
    Eigen::VectorXd lambda = svd.matrixV().col(s - 1);
    const double scale = lambda.cwiseAbs().maxCoeff();
    int j_star = -1;
    int p_star = -1;
    for (int i = 0; i < s; ++i) {
      if (std::abs(lambda[i]) <= 1e-12 * scale) continue;
      double ratio = cur.weights[i] / lambda[i];
      if (lambda[i] < 0) {
        if (j_star < 0 || ratio > cur.weights[j_star] / lambda[j_star]) {
          j_star = i;
        }
      } else if (p_star < 0 || ratio < cur.weights[p_star] / lambda[p_star]) {
        p_star = i;
      }
    }
    auto shifted = [&](int drop) {
      InformationStructure out = cur;
      const double step = cur.weights[drop] / lambda[drop];
      for (int i = 0; i < s; ++i) {
        out.weights[i] = cur.weights[i] - lambda[i] * step;
      }
      out.weights[drop] = 0.0;
      for (double& w : out.weights) w = std::max(w, 0.0);
      double total = 0.0;
      for (double w : out.weights) total += w;
      for (double& w : out.weights) w /= total;
      return DropZeroWeights(out);
    };
    InformationStructure a = shifted(j_star);
    InformationStructure b = shifted(p_star);
    cur = Value(game, b) > Value(game, a) + 1e-12 ? b : a;
    cur = MergeDuplicates(cur);
  }
  return cur;
}

InformationStructure CollapsePair(const InformationStructure& tau, int i,
                                  int j) {
  if (i == j || i < 0 || j < 0 || i >= tau.size() || j >= tau.size()) {
    throw ValidationError("collapse needs two distinct valid indices");
  }
  const double w = tau.weights[i] + tau.weights[j];
  Belief mixed =
      (tau.weights[i] * tau.support[i] + tau.weights[j] * tau.support[j]) / w;
  InformationStructure out;
  for (int t = 0; t < tau.size(); ++t) {
    if (t == j) continue;
    if (t == i) {
      out.support.push_back(mixed);
      out.weights.push_back(w);
    } else {
      out.support.push_back(tau.support[t]);
      out.weights.push_back(tau.weights[t]);
    }
  }
  return out;
}

}  // namespace persuade
