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

#ifndef PERSUADE_ADVICE_H_
#define PERSUADE_ADVICE_H_

#include <string>
#include <vector>

#include "persuade/game.h"
#include "persuade/solver.h"

namespace persuade {

inline constexpr double kGarblingTol = 1e-8;

struct AdviceOutcome {
  int k = 0;
  SolveResult result;
  double receiver_value = 0.0;
};

// The receiver picks the signal count first, the sender then best responds.
struct AdviceEquilibrium {
  int chosen_k = 0;
  std::vector<AdviceOutcome> per_k;
};

// Receiver value ties resolve to the smaller k.
AdviceEquilibrium SolveAdviceGame(const Game& game, int k_max,
                                  const SolveOptions& options = {});

// Three states, five actions, uniform prior. a_0 is the default, a_1 is a
// safe action, a_2 and a_3 bet on states 2 and 3, a_4 hedges on both. The
// sender values a_2 and a_3 at 10, a_1 and a_4 at 1, a_0 at 0.
Game AdviceExampleGame();

// Same receiver, sender payoffs replaced by the receiver's.
Game AlignedVariant(const Game& game);

enum class Informativeness {
  kAMoreInformative,
  kBMoreInformative,
  kEqual,
  kIncomparable
};

std::string ToString(Informativeness c);

// True when b is a garbling of a: some stochastic map sends a's posteriors to
// b's while preserving each of b's posteriors as the mean of what maps to it.
bool IsGarbling(const InformationStructure& a, const InformationStructure& b);

Informativeness CompareInformativeness(const InformationStructure& a,
                                       const InformationStructure& b,
                                       const Belief& prior);

}  // namespace persuade

#endif  // PERSUADE_ADVICE_H_
