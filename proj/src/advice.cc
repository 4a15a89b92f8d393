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

#include "persuade/advice.h"

#include "persuade/errors.h"
#include "persuade/lp.h"

namespace persuade {

AdviceEquilibrium SolveAdviceGame(const Game& game, int k_max,
                                  const SolveOptions& options) {
  if (k_max < 1) throw ValidationError("kmax must be at least 1");
  Solver solver(game);
  AdviceEquilibrium eq;
  double best = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    AdviceOutcome o;
    o.k = k;
    o.result = solver.Solve(k, options);
    o.receiver_value = EvaluateStructure(game, o.result.structure).receiver;
    if (eq.chosen_k == 0 || o.receiver_value > best + 1e-9) {
      eq.chosen_k = k;
      best = o.receiver_value;
    }
    eq.per_k.push_back(std::move(o));
  }
  return eq;
}

Game AdviceExampleGame() {
  Eigen::MatrixXd receiver(5, 3);
  const double t = 1.0 / 3.0;
  receiver << -1, 12, 12,
              10 * t, 10 * t, 10 * t,
              -100 * t, 83 * t, -100 * t,
              -100 * t, -100 * t, 83 * t,
              -50 * t, 58 * t, 58 * t;
  Eigen::MatrixXd sender(5, 3);
  sender.row(0).setConstant(0.0);
  sender.row(1).setConstant(1.0);
  sender.row(2).setConstant(10.0);
  sender.row(3).setConstant(10.0);
  sender.row(4).setConstant(1.0);
  return Game::FromMatrices({"w1", "w2", "w3"}, {"a0", "a1", "a2", "a3", "a4"},
                            receiver, sender, Barycenter(3));
}

Game AlignedVariant(const Game& game) {
  return Game::FromMatrices(game.states(), game.actions(),
                            game.receiver_payoffs(), game.receiver_payoffs(),
                            game.prior());
}

std::string ToString(Informativeness c) {
  switch (c) {
    case Informativeness::kAMoreInformative:
      return "a_more_informative";
    case Informativeness::kBMoreInformative:
      return "b_more_informative";
    case Informativeness::kEqual:
      return "equal";
    case Informativeness::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

bool IsGarbling(const InformationStructure& a, const InformationStructure& b) {
  const int sa = a.size();
  const int sb = b.size();
  const int n = static_cast<int>(a.support[0].size());
  // Variables P(i, j) >= 0, column-major by j.
  // Rows: sum_j P(i, j) = tau_a(i); sum_i P(i, j) mu_a(i) = tau_b(j) mu_b(j).
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(sa + sb * n, sa * sb);
  Eigen::VectorXd rhs(sa + sb * n);
  for (int i = 0; i < sa; ++i) {
    for (int j = 0; j < sb; ++j) m(i, j * sa + i) = 1.0;
    rhs[i] = a.weights[i];
  }
  for (int j = 0; j < sb; ++j) {
    for (int i = 0; i < sa; ++i) {
      m.block(sa + j * n, j * sa + i, n, 1) = a.support[i];
    }
    rhs.segment(sa + j * n, n) = b.weights[j] * b.support[j];
  }
  return LpFeasible(m, rhs, kGarblingTol);
}

Informativeness CompareInformativeness(const InformationStructure& a,
                                       const InformationStructure& b,
                                       const Belief& prior) {
  CheckBayesPlausible(a, prior);
  CheckBayesPlausible(b, prior);
  bool a_over_b = IsGarbling(a, b);
  bool b_over_a = IsGarbling(b, a);
  if (a_over_b && b_over_a) return Informativeness::kEqual;
  if (a_over_b) return Informativeness::kAMoreInformative;
  if (b_over_a) return Informativeness::kBMoreInformative;
  return Informativeness::kIncomparable;
}

}  // namespace persuade
