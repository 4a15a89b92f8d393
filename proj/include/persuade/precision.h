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

#ifndef PERSUADE_PRECISION_H_
#define PERSUADE_PRECISION_H_

#include <vector>

#include "persuade/game.h"
#include "persuade/solver.h"

namespace persuade {

struct PrecisionCurve {
  // values[j] = V*(j + 1).
  std::vector<double> values;
  // increments[j] = values[j + 1] - values[j].
  std::vector<double> increments;
};

// Three states, actions a_0..a_3. The receiver takes a_i (i >= 1) exactly
// when the posterior on state i reaches pi_bar, a_0 otherwise; the sender
// gets 0 from a_0 and 1 from every other action. Requires 1/3 < pi_bar < 1.
Game ThresholdGame(double pi_bar);
Game ThresholdGame(double pi_bar, const Belief& prior);

// Every coordinate strictly above 1 - pi_bar.
bool InDeltaC(double pi_bar, const Belief& belief);

struct TwoSignalBounds {
  double upper = 0.0;
  double lower = 0.0;
};
// Two-signal value bounds over the central set of the threshold game:
// upper (2 pi_bar - 1) / pi_bar, lower 1 / (3 pi_bar). Requires pi_bar > 2/3.
TwoSignalBounds ThresholdTwoSignalBounds(double pi_bar);

PrecisionCurve ValueCurve(const Game& game, int k_max,
                          const SolveOptions& options = {});
PrecisionCurve ValueCurve(const Solver& solver, const Belief& prior, int k_max,
                          const SolveOptions& options = {});

struct BoundCheck {
  bool holds = false;
  // (2/k) V*(k) - (V*(k) - V*(k-1)).
  double slack = 0.0;
};

// The gap V*(k) - V*(k-1) is at most (2/k) V*(k) when every sender payoff is
// positive. Throws PreconditionUnmet otherwise, ValidationError for k < 3.
BoundCheck CheckIncrementBound(const Game& game, int k,
                               const SolveOptions& options = {});

}  // namespace persuade

#endif  // PERSUADE_PRECISION_H_
