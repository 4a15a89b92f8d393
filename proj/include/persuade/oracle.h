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

#ifndef PERSUADE_ORACLE_H_
#define PERSUADE_ORACLE_H_

#include "persuade/continuum.h"
#include "persuade/game.h"

namespace persuade {

// Deliberately naive verifiers. They read game data but share no geometry,
// weight or optimization code with the solver.

struct OracleResult {
  double value = 0.0;
  InformationStructure structure;
  // Candidate beliefs considered.
  int candidates = 0;
};

// Best k-point structure whose beliefs come from a finite candidate set:
// lattice points at spacing 1/resolution that sit on a simplex face or an
// indifference plane, crossings of lattice lines with indifference planes,
// and every region vertex. The last belief of each structure is placed where
// the ray from a candidate mixture through the prior meets a face or plane.
// Limits: n <= 4, k <= 3, resolution <= 80.
OracleResult BruteForceSolve(const Game& game, int k, int resolution);

// Lipschitz-type slack for comparing the oracle with the solver at a given
// resolution: (largest sender payoff spread) * 2 / resolution.
double OracleGapBound(const Game& game, int resolution);

// Best partition with at most k cells and breakpoints on the 1/resolution
// lattice, means by composite Simpson quadrature of the CDF. Limit k <= 3.
double BruteForcePartition(const ContinuumProblem& problem, int k,
                           int resolution);

}  // namespace persuade

#endif  // PERSUADE_ORACLE_H_
