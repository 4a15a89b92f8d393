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

#include "persuade/lp.h"

#include <cmath>
#include <limits>
#include <vector>

namespace persuade {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;
constexpr int kMaxPivots = 200000;

// Row `rows_` of `t_` holds reduced costs; its last entry is minus the
// current objective.
class Tableau {
 public:
  Tableau(int rows, int vars)
      : t_(Eigen::MatrixXd::Zero(rows + 1, vars + 1)),
        basis_(rows, -1),
        rows_(rows),
        vars_(vars) {}

  double& at(int r, int c) { return t_(r, c); }
  double rhs(int r) const { return t_(r, vars_); }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int c) { basis_[r] = c; }
  int pivots() const { return pivots_; }

  void Pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[r] = c;
    ++pivots_;
  }

  // Rebuilds the reduced-cost row for objective `c` over the current basis.
  void SetObjective(const Eigen::VectorXd& c) {
    t_.row(rows_).setZero();
    for (int j = 0; j < c.size(); ++j) t_(rows_, j) = c[j];
    for (int r = 0; r < rows_; ++r) {
      int b = basis_[r];
      double cb = b < c.size() ? c[b] : 0.0;
      if (cb != 0.0) t_.row(rows_) -= cb * t_.row(r);
    }
  }

  LpStatus Run(int allowed_vars) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed_vars; ++j) {
        if (t_(rows_, j) > kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows_; ++r) {
        double p = t_(r, enter);
        if (p <= kPivotTol) continue;
        double ratio = std::max(0.0, t_(r, vars_)) / p;
        if (ratio < best - 1e-13 ||
            (ratio <= best + 1e-13 && leave >= 0 &&
             basis_[r] < basis_[leave])) {
          best = std::min(best, ratio);
          leave = r;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      Pivot(leave, enter);
      if (pivots_ > kMaxPivots) return LpStatus::kInfeasible;
    }
  }

 private:
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  int rows_;
  int vars_;
  int pivots_ = 0;
};

}  // namespace

LpResult SolveLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c, double feas_tol) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  LpResult result;
  result.x = Eigen::VectorXd::Zero(n);

  Tableau tab(m, n + m);
  for (int r = 0; r < m; ++r) {
    double sign = b[r] < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) tab.at(r, j) = sign * a(r, j);
    tab.at(r, n + r) = 1.0;
    tab.at(r, n + m) = sign * b[r];
    tab.set_basis(r, n + r);
  }

  // Phase one: minimize the artificial sum.
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setConstant(-1.0);
  tab.SetObjective(phase1);
  tab.Run(n + m);
  double infeasibility = 0.0;
  for (int r = 0; r < m; ++r) {
    if (tab.basis(r) >= n) infeasibility += std::abs(tab.rhs(r));
  }
  if (infeasibility > feas_tol) {
    result.status = LpStatus::kInfeasible;
    result.pivots = tab.pivots();
    return result;
  }

  // Drive zero-level artificials out of the basis where possible; rows where
  // that fails are redundant and stay pinned at zero.
  for (int r = 0; r < m; ++r) {
    if (tab.basis(r) < n) continue;
    int best = -1;
    double best_abs = 1e-9;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.at(r, j)) > best_abs) {
        best_abs = std::abs(tab.at(r, j));
        best = j;
      }
    }
    if (best >= 0) tab.Pivot(r, best);
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = c;
  tab.SetObjective(phase2);
  LpStatus status = tab.Run(n);
  result.status = status;
  result.pivots = tab.pivots();
  if (status != LpStatus::kOptimal) return result;
  for (int r = 0; r < m; ++r) {
    if (tab.basis(r) < n) result.x[tab.basis(r)] = std::max(0.0, tab.rhs(r));
  }
  result.objective = c.dot(result.x);
  return result;
}

bool LpFeasible(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                double feas_tol) {
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(a.cols());
  return SolveLp(a, b, zero, feas_tol).status == LpStatus::kOptimal;
}

}  // namespace persuade
