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

#ifndef APPROXSUB_SIMPLEX_HPP
#define APPROXSUB_SIMPLEX_HPP

#include <Eigen/Dense>
#include <vector>

namespace approxsub {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;  // primal solution, size = number of columns
};

// min c'x  s.t.  Ax = b, x >= 0.
// Dense two-phase tableau simplex with Bland's rule; internal helper for
// the convex-closure LP, not a general-purpose solver.
LpResult solve_lp_equality(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, double pivot_tol = 1e-9);

}  // namespace approxsub

#endif  // APPROXSUB_SIMPLEX_HPP
