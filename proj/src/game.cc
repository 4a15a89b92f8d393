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

#include "persuade/game.h"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "persuade/errors.h"

namespace persuade {

void ValidateBelief(const Belief& b, int num_states) {
  if (b.size() != num_states) {
    std::ostringstream os;
    os << "belief has " << b.size() << " coordinates, expected " << num_states;
    throw ValidationError(os.str());
  }
  for (int i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b[i]) || b[i] < 0.0) {
      std::ostringstream os;
      os << "belief coordinate " << i << " = " << b[i] << " is not >= 0";
      throw ValidationError(os.str());
    }
  }
  if (std::abs(b.sum() - 1.0) > kBeliefSumTol) {
    std::ostringstream os;
    os.precision(17);
    os << "belief sums to " << b.sum() << ", expected 1";
    throw ValidationError(os.str());
  }
}

Belief NormalizeBelief(const Belief& b) {
  Belief out = b.cwiseMax(0.0);
  double s = out.sum();
  if (s <= 0.0) throw ValidationError("cannot normalize a zero belief");
  return out / s;
}

Belief Barycenter(int num_states) {
  return Belief::Constant(num_states, 1.0 / num_states);
}

Game Game::FromMatrices(std::vector<std::string> states,
                        std::vector<std::string> actions,
                        Eigen::MatrixXd receiver, Eigen::MatrixXd sender,
                        Belief prior) {
  Game g;
  g.states_ = std::move(states);
  g.actions_ = std::move(actions);
  g.receiver_ = std::move(receiver);
  g.mode_ = SenderMode::kMatrix;
  g.sender_spec_ = std::move(sender);
  g.prior_ = std::move(prior);
  g.Validate();
  g.sender_linear_ = g.sender_spec_;
  return g;
}

Game Game::FromAffine(std::vector<std::string> states,
                      std::vector<std::string> actions,
                      Eigen::MatrixXd receiver, Eigen::MatrixXd affine,
                      Belief prior) {
  Game g;
  g.states_ = std::move(states);
  g.actions_ = std::move(actions);
  g.receiver_ = std::move(receiver);
  g.mode_ = SenderMode::kAffine;
  g.sender_spec_ = std::move(affine);
  g.prior_ = std::move(prior);
  g.Validate();
  // On the simplex the constant term folds into the linear part.
  const int n = g.num_states();
  g.sender_linear_ = g.sender_spec_.leftCols(n);
  g.sender_linear_.colwise() += g.sender_spec_.col(n);
  return g;
}

void Game::Validate() const {
  const int n = num_states();
  const int m = num_actions();
  if (n < 2) throw ValidationError("states: need at least 2 states");
  if (m < 2) throw ValidationError("actions: need at least 2 actions");
  for (const auto* labels : {&states_, &actions_}) {
    const char* field = labels == &states_ ? "states" : "actions";
    std::set<std::string> seen;
    for (const std::string& s : *labels) {
      if (s.empty()) throw ValidationError(std::string(field) + ": empty label");
      if (!seen.insert(s).second) {
        throw ValidationError(std::string(field) + ": duplicate label " + s);
      }
    }
  }
  if (receiver_.rows() != m || receiver_.cols() != n) {
    std::ostringstream os;
    os << "receiver_payoffs: expected " << m << "x" << n << ", got "
       << receiver_.rows() << "x" << receiver_.cols();
    throw ValidationError(os.str());
  }
  const int expect_cols = mode_ == SenderMode::kMatrix ? n : n + 1;
  const char* field =
      mode_ == SenderMode::kMatrix ? "sender_payoffs" : "sender_affine";
  if (sender_spec_.rows() != m || sender_spec_.cols() != expect_cols) {
    std::ostringstream os;
    os << field << ": expected " << m << "x" << expect_cols << ", got "
       << sender_spec_.rows() << "x" << sender_spec_.cols();
    throw ValidationError(os.str());
  }
  if (!receiver_.allFinite()) {
    throw ValidationError("receiver_payoffs: non-finite entry");
  }
  if (!sender_spec_.allFinite()) {
    throw ValidationError(std::string(field) + ": non-finite entry");
  }
  try {
    ValidateBelief(prior_, n);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("prior: ") + e.what());
  }
  for (int i = 0; i < n; ++i) {
    if (prior_[i] <= 0.0) {
      std::ostringstream os;
      os << "prior: coordinate " << i << " must be strictly positive";
      throw ValidationError(os.str());
    }
  }
}

Game Game::WithPrior(const Belief& prior) const {
  Game g = *this;
  g.prior_ = prior;
  g.Validate();
  return g;
}

bool Game::operator==(const Game& other) const {
  return states_ == other.states_ && actions_ == other.actions_ &&
         mode_ == other.mode_ && receiver_ == other.receiver_ &&
         sender_spec_ == other.sender_spec_ && prior_ == other.prior_;
}

Belief InformationStructure::Mean() const {
  Belief mean = Belief::Zero(support.empty() ? 0 : support[0].size());
  for (int i = 0; i < size(); ++i) mean += weights[i] * support[i];
  return mean;
}

void CheckBayesPlausible(const InformationStructure& tau, const Belief& prior,
                         double tol) {
  if (tau.support.empty() || tau.support.size() != tau.weights.size()) {
    throw BayesViolation("support and weights must be nonempty and aligned");
  }
  double total = 0.0;
  for (int i = 0; i < tau.size(); ++i) {
    if (!(tau.weights[i] > 0.0)) {
      throw BayesViolation("weights must be strictly positive");
    }
    if (tau.support[i].size() != prior.size()) {
      throw BayesViolation("support belief has the wrong dimension");
    }
    total += tau.weights[i];
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    std::ostringstream os;
    os << "weights sum to " << total;
    throw BayesViolation(os.str());
  }
  double gap = (tau.Mean() - prior).cwiseAbs().maxCoeff();
  if (gap > tol) {
    std::ostringstream os;
    os << "posterior mean misses the prior by " << gap;
    throw BayesViolation(os.str());
  }
}

std::vector<int> OptimalActionSet(const Game& game, const Belief& belief) {
  Eigen::VectorXd payoff = game.receiver_payoffs() * belief;
  double best = payoff.maxCoeff();
  std::vector<int> out;
  for (int a = 0; a < payoff.size(); ++a) {
    if (payoff[a] >= best - kIndifferenceTol) out.push_back(a);
  }
  return out;
}

int SenderPreferredAction(const Game& game, const Belief& belief) {
  int chosen = -1;
  double best = 0.0;
  for (int a : OptimalActionSet(game, belief)) {
    double v = game.sender_linear().row(a).dot(belief);
    // Strict comparison keeps the lowest index among exact sender ties.
    if (chosen < 0 || v > best) {
      chosen = a;
      best = v;
    }
  }
  return chosen;
}

double SenderValue(const Game& game, const Belief& belief) {
  int a = SenderPreferredAction(game, belief);
  return game.sender_linear().row(a).dot(belief);
}

double ReceiverValue(const Game& game, const Belief& belief) {
  int a = SenderPreferredAction(game, belief);
  return game.receiver_payoffs().row(a).dot(belief);
}

ExpectedValues EvaluateStructure(const Game& game,
                                 const InformationStructure& tau) {
  CheckBayesPlausible(tau, game.prior());
  ExpectedValues out;
  for (int i = 0; i < tau.size(); ++i) {
    out.sender += tau.weights[i] * SenderValue(game, tau.support[i]);
    out.receiver += tau.weights[i] * ReceiverValue(game, tau.support[i]);
  }
  return out;
}

Eigen::MatrixXd SignalKernel(const Game& game,
                             const InformationStructure& tau) {
  CheckBayesPlausible(tau, game.prior());
  const Belief& prior = game.prior();
  Eigen::MatrixXd kernel(tau.size(), prior.size());
  for (int s = 0; s < tau.size(); ++s) {
    for (int w = 0; w < prior.size(); ++w) {
      kernel(s, w) = tau.support[s][w] * tau.weights[s] / prior[w];
    }
  }
  return kernel;
}

InformationStructure UpdateThroughKernel(const Belief& prior,
                                         const Eigen::MatrixXd& kernel) {
  InformationStructure tau;
  for (int s = 0; s < kernel.rows(); ++s) {
    Belief joint = kernel.row(s).transpose().cwiseProduct(prior);
    double p = joint.sum();
    if (p <= 0.0) continue;
    tau.support.push_back(joint / p);
    tau.weights.push_back(p);
  }
  return tau;
}

InformationStructure NoInformation(const Belief& prior) {
  return InformationStructure{{prior}, {1.0}};
}

Game FinancialGame() {
  const double r = 0.3;
  Eigen::MatrixXd receiver(3, 3);
  // Long pays p_up - p_down - r, short the mirror image, nothing pays 0.
  receiver << 1 - r, -r, -1 - r,
              -1 - r, -r, 1 - r,
              0, 0, 0;
  // The commission c = |p_down - p_up| - r leaves the sender with exactly
  // the receiver's surplus of whichever position is taken.
  Eigen::MatrixXd affine(3, 4);
  affine << 1, 0, -1, -r,
            -1, 0, 1, -r,
            0, 0, 0, 0;
  Belief prior(3);
  prior << 0.3, 0.4, 0.3;
  return Game::FromAffine({"up", "flat", "down"}, {"long", "short", "nothing"},
                          receiver, affine, prior);
}

}  // namespace persuade
