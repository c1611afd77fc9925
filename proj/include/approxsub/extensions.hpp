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

#ifndef APPROXSUB_EXTENSIONS_HPP
#define APPROXSUB_EXTENSIONS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "approxsub/set_function.hpp"

namespace approxsub {

// Point in [0,1]^n; validated with tolerance 1e-12 on load.
using HypercubePoint = Eigen::VectorXd;

void check_cube_point(const HypercubePoint& x, int n);

struct GammaVector {
  Eigen::VectorXd gamma;   // gamma[i] belongs to element i+1
  std::vector<int> perm;   // the chain permutation that generated it
};

struct LpSolution {
  double objective = 0.0;
  std::vector<double> y;  // distribution over subsets, indexed by mask
  bool optimal = false;
};

// Lovasz extension via sorted-coordinate telescoping. Coordinates are
// sorted descending; ties broken by ascending element index.
double lovasz_eval(const SetFunction& f, const HypercubePoint& x);

GammaVector gamma_of_perm(const SetFunction& f, const std::vector<int>& perm);
std::vector<GammaVector> gamma_vertices(const SetFunction& f);  // all n!, n<=8

// max over Gamma(f) of gamma . x; must equal lovasz_eval.
double lovasz_as_gamma_max(const SetFunction& f, const HypercubePoint& x);

// Convex closure: min sum f(S) y(S) s.t. marginals = x, sum y = 1, y >= 0.
// Requires f(empty) = 0.
LpSolution convex_closure_eval(const SetFunction& f, const HypercubePoint& x);

struct SandwichReport {
  double max_gap = 0.0;  // max over points of F^L - F^C
  double budget = 0.0;   // n * D[f]
  bool pass = false;
  int points_checked = 0;
};

SandwichReport sandwich_check(const SetFunction& f,
                              const std::vector<HypercubePoint>& xs);

// max over vertices of |f - g|; the sup distance of the Lovasz extensions.
double lovasz_sup_distance(const SetFunction& f, const SetFunction& g);

double multilinear_eval(const SetFunction& f, const HypercubePoint& x);
Eigen::VectorXd multilinear_grad(const SetFunction& f, const HypercubePoint& x);
Eigen::MatrixXd multilinear_hessian(const SetFunction& f,
                                    const HypercubePoint& x);

struct HessianReport {
  double max_offdiag = 0.0;
  double bound = 0.0;  // 2^{n-3} * D[f]
  double max_fd_error = 0.0;
  bool pass = false;
};

HessianReport hessian_bound_check(const SetFunction& f,
                                  const std::vector<HypercubePoint>& xs,
                                  double d_bound);

struct UpconcavityReport {
  double max_violation = 0.0;
  double budget = 0.0;  // n (n^{3/2} - 1) 2^{n-4} D[f]
  bool pass = false;
  int trials = 0;
};

// Monte Carlo falsification of eps-up-concavity of the multilinear
// extension along nonnegative directions; mt19937_64 seeded.
UpconcavityReport upconcavity_violation_sample(const SetFunction& f, int trials,
                                               std::uint64_t seed,
                                               double d_bound);

}  // namespace approxsub

#endif  // APPROXSUB_EXTENSIONS_HPP
