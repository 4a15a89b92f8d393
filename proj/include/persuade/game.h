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

#ifndef PERSUADE_GAME_H_
#define PERSUADE_GAME_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace persuade {

// A point of the probability simplex over states.
using Belief = Eigen::VectorXd;

inline constexpr double kIndifferenceTol = 1e-9;
inline constexpr double kBeliefSumTol = 1e-12;
inline constexpr double kWeightSumTol = 1e-10;
inline constexpr double kPlausibilityTol = 1e-9;

enum class SenderMode { kMatrix, kAffine };

// Throws ValidationError unless `b` has nonnegative coordinates summing to one.
void ValidateBelief(const Belief& b, int num_states);

// Clamps round-off negatives and rescales onto the simplex.
Belief NormalizeBelief(const Belief& b);

Belief Barycenter(int num_states);

class Game {
 public:
  // Sender payoffs given per (action, state).
  static Game FromMatrices(std::vector<std::string> states,
                           std::vector<std::string> actions,
                           Eigen::MatrixXd receiver, Eigen::MatrixXd sender,
                           Belief prior);

  // Sender value of action a at belief mu is affine(a, 0..n-1) . mu +
  // affine(a, n).
  static Game FromAffine(std::vector<std::string> states,
                         std::vector<std::string> actions,
                         Eigen::MatrixXd receiver, Eigen::MatrixXd affine,
                         Belief prior);

  int num_states() const { return static_cast<int>(states_.size()); }
  int num_actions() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const Eigen::MatrixXd& receiver_payoffs() const { return receiver_; }
  SenderMode sender_mode() const { return mode_; }
  // Matrix mode: the m x n payoffs. Affine mode: the m x (n+1) coefficients.
  const Eigen::MatrixXd& sender_spec() const { return sender_spec_; }
  const Belief& prior() const { return prior_; }

  // Per-action sender value as a linear form on the simplex; row a dotted
  // with a belief gives the sender's expected payoff from action a.
  const Eigen::MatrixXd& sender_linear() const { return sender_linear_; }

  Game WithPrior(const Belief& prior) const;

  bool operator==(const Game& other) const;

 private:
  Game() = default;
  void Validate() const;

  std::vector<std::string> states_;
  std::vector<std::string> actions_;
  Eigen::MatrixXd receiver_;
  SenderMode mode_ = SenderMode::kMatrix;
  Eigen::MatrixXd sender_spec_;
  Eigen::MatrixXd sender_linear_;
  Belief prior_;
};

struct InformationStructure {
  std::vector<Belief> support;
  std::vector<double> weights;

  int size() const { return static_cast<int>(support.size()); }
  Belief Mean() const;
};

// Throws BayesViolation unless weights are positive, sum to one and average
// the support back to `prior`.
void CheckBayesPlausible(const InformationStructure& tau, const Belief& prior,
                         double tol = kPlausibilityTol);

std::vector<int> OptimalActionSet(const Game& game, const Belief& belief);
int SenderPreferredAction(const Game& game, const Belief& belief);
double SenderValue(const Game& game, const Belief& belief);
double ReceiverValue(const Game& game, const Belief& belief);

struct ExpectedValues {
  double sender = 0.0;
  double receiver = 0.0;
};
ExpectedValues EvaluateStructure(const Game& game,
                                 const InformationStructure& tau);

// Rows index signals, columns index states: kernel(s, w) = pi(s | w).
Eigen::MatrixXd SignalKernel(const Game& game, const InformationStructure& tau);

// Bayesian update of `prior` through `kernel`; signals of zero probability
// are dropped.
InformationStructure UpdateThroughKernel(const Belief& prior,
                                         const Eigen::MatrixXd& kernel);

InformationStructure NoInformation(const Belief& prior);

// Trading example: states (up, flat, down), actions (long, short, nothing),
// forgone risk-free return r = 0.3, and a commission that extracts the whole surplus of
// any position taken. Prior (0.3, 0.4, 0.3).
Game FinancialGame();

}  // namespace persuade

#endif  // PERSUADE_GAME_H_
