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

#include "persuade/precision.h"

#include <sstream>

#include "persuade/errors.h"

namespace persuade {

Game ThresholdGame(double pi_bar) { return ThresholdGame(pi_bar, Barycenter(3)); }

Game ThresholdGame(double pi_bar, const Belief& prior) {
  if (!(pi_bar > 1.0 / 3.0 && pi_bar < 1.0)) {
    std::ostringstream os;
    os << "pi_bar = " << pi_bar << " must lie in (1/3, 1)";
    throw DomainError(os.str());
  }
  Eigen::MatrixXd receiver = Eigen::MatrixXd::Zero(4, 3);
  Eigen::MatrixXd sender = Eigen::MatrixXd::Ones(4, 3);
  sender.row(0).setZero();
  for (int i = 1; i <= 3; ++i) {
    receiver.row(i).setConstant(-1.0);
    receiver(i, i - 1) = (1.0 - pi_bar) / pi_bar;
  }
  return Game::FromMatrices({"w1", "w2", "w3"}, {"a0", "a1", "a2", "a3"},
                            receiver, sender, prior);
}

bool InDeltaC(double pi_bar, const Belief& belief) {
  // Strict, with a margin so that grid points such as 0.2 vs 1 - 0.8 do not
  // land inside through rounding.
  for (int i = 0; i < belief.size(); ++i) {
    if (!(belief[i] - (1.0 - pi_bar) > 1e-12)) return false;
  }
  return true;
}

TwoSignalBounds ThresholdTwoSignalBounds(double pi_bar) {
  if (!(pi_bar > 2.0 / 3.0 && pi_bar < 1.0)) {
    std::ostringstream os;
    os << "pi_bar = " << pi_bar << " must lie in (2/3, 1)";
    throw DomainError(os.str());
  }
  return {(2.0 * pi_bar - 1.0) / pi_bar, 1.0 / (3.0 * pi_bar)};
}

PrecisionCurve ValueCurve(const Solver& solver, const Belief& prior, int k_max,
                          const SolveOptions& options) {
  if (k_max < 1) throw ValidationError("kmax must be at least 1");
  PrecisionCurve curve;
  for (int k = 1; k <= k_max; ++k) {
    curve.values.push_back(solver.SolveAt(prior, k, options).value);
  }
  for (size_t j = 1; j < curve.values.size(); ++j) {
    curve.increments.push_back(curve.values[j] - curve.values[j - 1]);
  }
  return curve;
}

PrecisionCurve ValueCurve(const Game& game, int k_max,
                          const SolveOptions& options) {
  return ValueCurve(Solver(game), game.prior(), k_max, options);
}

BoundCheck CheckIncrementBound(const Game& game, int k,
                               const SolveOptions& options) {
  if (k < 3) throw ValidationError("the increment bound needs k >= 3");
  // In affine mode the payoff of an action is its value at each vertex.
  if (game.sender_linear().minCoeff() <= 0.0) {
    throw PreconditionUnmet(
        "sender payoffs must be strictly positive for the increment bound");
  }
  Solver solver(game);
  double vk = solver.Solve(k, options).value;
  double vk1 = solver.Solve(k - 1, options).value;
  BoundCheck out;
  out.slack = 2.0 / k * vk - (vk - vk1);
  out.holds = out.slack >= -1e-9;
  return out;
}

}  // namespace persuade
