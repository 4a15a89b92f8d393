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

#ifndef PERSUADE_IO_H_
#define PERSUADE_IO_H_

#include <string>
#include <vector>

#include "persuade/game.h"
#include "persuade/solver.h"

namespace persuade {

// Parses a game document (see README for the schema). Throws ParseError on
// malformed JSON or wrong field types, ValidationError on bad values.
Game GameFromJson(const std::string& text);
std::string GameToJson(const Game& game);

// Builtins: "financial", "threshold:PI", "advice42". Anything else is read
// as a file path.
Game LoadGame(const std::string& path_or_builtin);
void SaveGame(const Game& game, const std::string& path);

// Priors (i, j, l) / grid with i, j, l >= 1 and i + j + l = grid.
std::vector<Belief> InteriorSimplexGrid(int grid);

struct SurfacePoint {
  Belief prior;
  double value = 0.0;
};

// V*(k) over InteriorSimplexGrid(grid). Throws ScaleExceeded unless n = 3.
std::vector<SurfacePoint> Surface(const Game& game, int k, int grid);
// Columns mu1, mu2, mu3, value.
std::string SurfaceCsv(const std::vector<SurfacePoint>& points);

struct ThresholdPoint {
  Belief prior;
  bool in_delta_c = false;
  double v2 = 0.0;
};

// V*(2) of ThresholdGame(pi_bar) over InteriorSimplexGrid(grid).
std::vector<ThresholdPoint> ThresholdSweep(double pi_bar, int grid);
// Columns mu1, mu2, mu3, in_delta_c, v2, lower, upper. The bound columns are
// empty when pi_bar <= 2/3.
std::string ThresholdCsv(double pi_bar, const std::vector<ThresholdPoint>& pts);

// One row per support belief: signal, weight, action, mu_*, kernel_*.
std::string SolveResultCsv(const Game& game, const SolveResult& result);

}  // namespace persuade

#endif  // PERSUADE_IO_H_
