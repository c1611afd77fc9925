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

#ifndef APPROXSUB_POLYTOPES_HPP
#define APPROXSUB_POLYTOPES_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "approxsub/extensions.hpp"
#include "approxsub/set_function.hpp"

namespace approxsub {

struct CutCertificate {
  int checked_points = 0;
  bool valid = false;
};

struct LinearCut {
  Eigen::VectorXd coeffs;
  double rhs = 0.0;
  double z_coeff = 0.0;  // 0 for knapsack cuts, 1 for epigraph cuts
  std::string provenance;  // extended_cover | epigraph | trivial
  bool guarantee = false;  // the analytic sufficient condition held
  CutCertificate certificate;
};

struct KnapsackInstance {
  SetFunction f;
  double b;
  Eigen::VectorXd c;
};

// phi must be increasing on [sigma, sigma + sum c].
struct EpigraphInstance {
  std::function<double(double)> phi;
  std::string phi_kind;  // "power" | "sqrt" | "custom"
  double p = 1.0;        // exponent when phi_kind == "power"
  Eigen::VectorXd c;     // nonneg
  double sigma = 0.0;
};

bool is_cover(const SetFunction& f, Mask s, double b);
bool is_minimal_cover(const SetFunction& f, Mask s, double b);

// E_pi(S) = S together with the outside elements whose chain marginal gain
// dominates every inside singleton value. pi must permute exactly the
// complement of S.
Mask set_extension(const SetFunction& f, Mask s, const std::vector<int>& pi);

// sum_{s in E_pi(S)} x_s <= |S| - 1; always enumeration-certified.
LinearCut extended_cover_cut(const SetFunction& f, Mask s,
                             const std::vector<int>& pi, double b,
                             double d_bound);

// For each extension element s: does some pair {t,u} in S make
// S | {s} minus {t,u} feasible? Needed by the facet condition.
struct FacetConditionReport {
  bool all_hold = false;
  std::vector<int> failing_elements;
};
FacetConditionReport extended_cover_facet_condition(const SetFunction& f,
                                                    Mask s, Mask extension,
                                                    double b);

// g_sigma(S) = phi(sigma + sum_{i in S} c_i) - phi(sigma), tabulated.
SetFunction epigraph_set_function(const EpigraphInstance& inst);

// -n*d_bound + gamma . x <= z - phi(sigma); gamma must lie in Gamma(g_sigma).
LinearCut epigraph_cut(const EpigraphInstance& inst, const GammaVector& gamma,
                       double d_bound);

// gamma in P_f  <=>  sum_{s in S} gamma_s <= f(S) for all S.
bool pf_membership(const SetFunction& f, const Eigen::VectorXd& gamma);

// min over S of f(S) + |S| D[f] - sum_{s in S} gamma_s; >= -1e-9 whenever
// gamma is a chain vertex of f.
double gamma_slack_check(const SetFunction& f, const GammaVector& gamma,
                         double d_value);

std::pair<Mask, double> knapsack_brute_force(const KnapsackInstance& inst);

struct PointCheckReport {
  double f_value = 0.0;  // multilinear-free: f evaluated via the instance map
  double objective = 0.0;
  bool feasible = false;
  std::vector<int> violated_cuts;  // indices into the supplied cut list
};

// Feasibility here uses the continuous composition u.x + (w.x)^p style map
// supplied by the caller as a functional; for integral x it reduces to f.
PointCheckReport point_checks(const KnapsackInstance& inst,
                              const std::function<double(const Eigen::VectorXd&)>& F,
                              const Eigen::VectorXd& x,
                              const std::vector<LinearCut>& cuts);

struct TrivialFacetReport {
  bool full_dimensional = false;
  std::vector<bool> upper_bound_facet;  // per element, x_s <= 1 facet test
};

TrivialFacetReport trivial_facet_predicates(const KnapsackInstance& inst);

}  // namespace approxsub

#endif  // APPROXSUB_POLYTOPES_HPP
