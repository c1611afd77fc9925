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

#ifndef APPROXSUB_INSTANCES_HPP
#define APPROXSUB_INSTANCES_HPP

#include <Eigen/Dense>
#include <vector>

#include "approxsub/polytopes.hpp"
#include "approxsub/set_function.hpp"

namespace approxsub {

// Facility-location instance with pairwise cooperative bonuses. Bonuses are
// stored on unordered facility pairs and added once per selected pair.
struct CuflpInstance {
  int m = 0;          // facilities (the ground set)
  int n_clients = 0;
  Eigen::MatrixXd v;  // m x n_clients profits
  Eigen::VectorXd b_dem;
  Eigen::MatrixXd u;  // upper-triangular bonus storage, u(p,q) with p < q
  double t = 1.0;     // stored bonuses are already divided by t
};

SetFunction cuflp_table(const CuflpInstance& inst);

// Classic 12-client / 7-facility profit matrix with a single cooperative
// bonus u_{6,7} = 25/t.
CuflpInstance build_cuflp(double t);

// D' = |supp(u)| * max u over unordered pairs.
double cuflp_near_bound(const CuflpInstance& inst);

// n * D'; budget for the closure-vs-Lovasz gap.
double cuflp_lovasz_budget(const CuflpInstance& inst);

// Knapsack demo: f(S) = u.x(S) + (w.x(S))^p with the fixed six-element data.
struct AskInstance {
  Eigen::VectorXd u_lin;
  Eigen::VectorXd w;
  double p = 1.1;
  Eigen::VectorXd c;
  double b = 28.3;
};

AskInstance ask_data();
KnapsackInstance build_ask();

// Continuous composition u.x + (w.x)^p for fractional point checks.
double ask_continuous(const AskInstance& inst, const Eigen::VectorXd& x);

// p * ||w||_1^{p-1} * ||w||_inf, an analytic bound on D[f].
double ask_D_bound(const AskInstance& inst);

}  // namespace approxsub

#endif  // APPROXSUB_INSTANCES_HPP
