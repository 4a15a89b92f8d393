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

#ifndef PERSUADE_PLAUSIBILITY_H_
#define PERSUADE_PLAUSIBILITY_H_

#include <vector>

#include "persuade/game.h"

namespace persuade {

inline constexpr double kAffineIndependenceTol = 1e-9;
inline constexpr double kNegativeWeightTol = 1e-10;
inline constexpr double kWeightResidualTol = 1e-9;

struct WeightSolution {
  std::vector<double> weights;
  // Norm of [sum_i w_i mu_i - prior; sum_i w_i - 1] before clamping.
  double residual = 0.0;
};

bool IsAffinelyIndependent(const std::vector<Belief>& support);

// The unique convex weights expressing `prior` over an affinely independent
// support. Throws NotAffinelyIndependent, or Infeasible when the prior lies
// outside the support's hull.
WeightSolution ChoquetWeights(const std::vector<Belief>& support,
                              const Belief& prior);

// Moves every support belief that sits in the interior of its action region
// along the ray from the prior until it reaches the region boundary, either
// outward or inward, whichever is better for the sender. Weights follow from
// Bayes plausibility.
InformationStructure ProjectToBoundary(const Game& game,
                                       const InformationStructure& tau);

// Shifts weight along a null direction of the augmented support matrix until
// one belief drops out, repeating until the support is affinely independent.
// Each step keeps the better of the two feasible endpoints.
InformationStructure ReduceAffinelyDependent(const Game& game,
                                             const InformationStructure& tau);

// Replaces beliefs i and j by their weighted mixture.
InformationStructure CollapsePair(const InformationStructure& tau, int i,
                                  int j);

}  // namespace persuade

#endif  // PERSUADE_PLAUSIBILITY_H_
