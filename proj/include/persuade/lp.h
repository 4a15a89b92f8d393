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

#ifndef PERSUADE_LP_H_
#define PERSUADE_LP_H_

#include <Eigen/Dense>

namespace persuade {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
  int pivots = 0;
};

// Dense two-phase simplex with Bland's rule for
//   maximize c'x  subject to  A x = b,  x >= 0.
// Meant for the small programs that show up here (at most a few hundred
// columns and a dozen rows). `feas_tol` bounds the phase-one residual that is
// still accepted as feasible.
LpResult SolveLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c, double feas_tol = 1e-9);

// True if {x >= 0 : A x = b} is nonempty.
bool LpFeasible(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                double feas_tol = 1e-9);

}  // namespace persuade

#endif  // PERSUADE_LP_H_
