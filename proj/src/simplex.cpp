// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "approxsub/simplex.hpp"

#include <limits>

namespace approxsub {

namespace {

// One phase of the tableau method under Bland's rule. `ncols_allowed`
// restricts which columns may enter (phase 2 forbids artificials).
// Returns false on unboundedness.
bool run_simplex(Eigen::MatrixXd& T, std::vector<int>& basis,
                 const Eigen::RowVectorXd& cost, int ncols_allowed,
                 double tol) {
  const int m = static_cast<int>(T.rows());
  const int ncols = static_cast<int>(T.cols()) - 1;  // last column is rhs
  // Reduced costs kept implicitly: z_j - c_j recomputed from the basis each
  // iteration. m is tiny (n + 1 rows) so this stays cheap.
  while (true) {
    Eigen::VectorXd cb(m);
    for (int i = 0; i < m; ++i) cb(i) = cost(basis[i]);
    int enter = -1;
    for (int j = 0; j < ncols_allowed; ++j) {
      const double reduced = cost(j) - cb.dot(T.col(j));
      if (reduced < -tol) {
        enter = j;  // Bland: smallest index
        break;
      }
    }
    if (enter < 0) return true;  // optimal
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) > tol) {
        const double ratio = T(i, ncols) / T(i, enter);
        if (ratio < best_ratio - tol ||
            (ratio < best_ratio + tol &&
             (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded
    // pivot
    T.row(leave) /= T(leave, enter);
    for (int i = 0; i < m; ++i) {
      if (i != leave && T(i, enter) != 0.0) {
        T.row(i) -= T(i, enter) * T.row(leave);
      }
    }
    basis[leave] = enter;
  }
}

}  // namespace

LpResult solve_lp_equality(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, double pivot_tol) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  // Tableau [A | I | rhs] with rows flipped so rhs >= 0.
  Eigen::MatrixXd T(m, n + m + 1);
  T.leftCols(n) = A;
  T.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  T.col(n + m) = b;
  for (int i = 0; i < m; ++i) {
    if (T(i, n + m) < 0.0) T.row(i) *= -1.0;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  LpResult res;
  // Phase 1: minimize the artificial sum.
  Eigen::RowVectorXd phase1 = Eigen::RowVectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  if (!run_simplex(T, basis, phase1, n + m, pivot_tol)) {
    res.status = LpStatus::Unbounded;  // cannot happen for phase 1
    return res;
  }
  double art_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) art_sum += T(i, n + m);
  }
  if (art_sum > 1e-7) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive any degenerate artificial out of the basis if possible.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(T(i, j)) > pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) continue;  // redundant row; artificial stays at zero
    T.row(i) /= T(i, enter);
    for (int r = 0; r < m; ++r) {
      if (r != i && T(r, enter) != 0.0) T.row(r) -= T(r, enter) * T.row(i);
    }
    basis[i] = enter;
  }

  // Phase 2 over the original columns only.
  Eigen::RowVectorXd phase2 = Eigen::RowVectorXd::Zero(n + m);
  phase2.head(n) = c.transpose();
  if (!run_simplex(T, basis, phase2, n, pivot_tol)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) res.x(basis[i]) = T(i, n + m);
  }
  res.objective = c.dot(res.x);
  return res;
}

}  // namespace approxsub
