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

#include "approxsub/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "approxsub/metrics.hpp"

namespace approxsub {

bool is_cover(const SetFunction& f, Mask s, double b) { return f.at(s) > b; }

bool is_minimal_cover(const SetFunction& f, Mask s, double b) {
  if (!is_cover(f, s, b)) return false;
  for (int i = 0; i < f.n(); ++i) {
    const Mask bi = Mask{1} << i;
    if ((s & bi) && f(s & ~bi) > b) return false;
  }
  return true;
}

Mask set_extension(const SetFunction& f, Mask s, const std::vector<int>& pi) {
  const int n = f.n();
  const Mask comp = f.full_mask() & ~s;
  if (static_cast<int>(pi.size()) != cardinality(comp)) {
    throw Error(ErrorCode::InvalidPerm,
                "permutation must cover exactly the complement");
  }
  Mask seen = 0;
  for (int e : pi) {
    if (e < 1 || e > n) throw Error(ErrorCode::InvalidPerm, "bad element");
    const Mask be = Mask{1} << (e - 1);
    if (!(comp & be) || (seen & be)) {
      throw Error(ErrorCode::InvalidPerm,
                  "permutation must cover exactly the complement");
    }
    seen |= be;
  }
  // Gain must dominate f({s}) for every s in S, i.e. the largest singleton.
  double max_singleton = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (s & (Mask{1} << i)) {
      max_singleton = std::max(max_singleton, f(Mask{1} << i));
    }
  }
  Mask extension = s;
  Mask chain = s;
  for (int e : pi) {
    const Mask be = Mask{1} << (e - 1);
    const double gain = f(chain | be) - f(chain);
    chain |= be;
    if (gain >= max_singleton) extension |= be;
  }
  return extension;
}

LinearCut extended_cover_cut(const SetFunction& f, Mask s,
                             const std::vector<int>& pi, double b,
                             double d_bound) {
  if (!is_cover(f, s, b)) {
    throw Error(ErrorCode::NotACover, "set is not a cover");
  }
  const int n = f.n();
  const Mask ext = set_extension(f, s, pi);
  LinearCut cut;
  cut.coeffs = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (ext & (Mask{1} << i)) cut.coeffs(i) = 1.0;
  }
  cut.rhs = cardinality(s) - 1;
  cut.z_coeff = 0.0;
  cut.provenance = "extended_cover";
  cut.guarantee = f(s) > n * d_bound + b;
  // Ground truth regardless of the sufficient condition: the cut is valid
  // iff no feasible point violates it.
  cut.certificate.valid = true;
  for (Mask x = 0; x <= f.full_mask(); ++x) {
    ++cut.certificate.checked_points;
    if (f(x) > b) continue;  // infeasible point, cut need not hold
    if (cardinality(x & ext) > cut.rhs + 1e-9) cut.certificate.valid = false;
  }
  return cut;
}

FacetConditionReport extended_cover_facet_condition(const SetFunction& f,
                                                    Mask s, Mask extension,
                                                    double b) {
  FacetConditionReport rep;
  rep.all_hold = true;
  const Mask outside = extension & ~s;
  for (int e = 0; e < f.n(); ++e) {
    const Mask be = Mask{1} << e;
    if (!(outside & be)) continue;
    bool found = false;
    for (int t = 0; t < f.n() && !found; ++t) {
      const Mask bt = Mask{1} << t;
      if (!(s & bt)) continue;
      for (int u = t + 1; u < f.n(); ++u) {
        const Mask bu = Mask{1} << u;
        if (!(s & bu)) continue;
        if (f((s | be) & ~(bt | bu)) <= b) {
          found = true;
          break;
        }
      }
    }
    if (!found) {
      rep.all_hold = false;
      rep.failing_elements.push_back(e + 1);
    }
  }
  return rep;
}

SetFunction epigraph_set_function(const EpigraphInstance& inst) {
  const int n = static_cast<int>(inst.c.size());
  std::vector<double> values(std::size_t{1} << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    double load = inst.sigma;
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) load += inst.c(i);
    }
    values[s] = inst.phi(load) - inst.phi(inst.sigma);
  }
  return SetFunction(n, std::move(values));
}

LinearCut epigraph_cut(const EpigraphInstance& inst, const GammaVector& gamma,
                       double d_bound) {
  const SetFunction g = epigraph_set_function(inst);
  const int n = g.n();
  // Recheck Gamma membership against the stored permutation.
  const GammaVector expect = gamma_of_perm(g, gamma.perm);
  for (int i = 0; i < n; ++i) {
    if (std::abs(expect.gamma(i) - gamma.gamma(i)) > 1e-9) {
      throw Error(ErrorCode::NotInGamma, "gamma does not match its chain");
    }
  }
  LinearCut cut;
  cut.coeffs = gamma.gamma;
  cut.z_coeff = 1.0;
  // gamma . x - n * d_bound <= z - phi(sigma), stored as coeffs.x <= z + rhs
  cut.rhs = n * d_bound - inst.phi(inst.sigma);
  cut.provenance = "epigraph";
  cut.guarantee = true;
  cut.certificate.valid = true;
  for (Mask s = 0; s <= g.full_mask(); ++s) {
    ++cut.certificate.checked_points;
    const double z = g(s) + inst.phi(inst.sigma);  // z = F_sigma(x(S))
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) lhs += gamma.gamma(i);
    }
    if (lhs > z + cut.rhs + 1e-9) cut.certificate.valid = false;
  }
  return cut;
}

bool pf_membership(const SetFunction& f, const Eigen::VectorXd& gamma) {
  const int n = f.n();
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) lhs += gamma(i);
    }
    if (lhs > f(s) + 1e-9) return false;
  }
  return true;
}

double gamma_slack_check(const SetFunction& f, const GammaVector& gamma,
                         double d_value) {
  const int n = f.n();
  double worst = std::numeric_limits<double>::infinity();
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) lhs += gamma.gamma(i);
    }
    worst = std::min(worst, f(s) + cardinality(s) * d_value - lhs);
  }
  return worst;
}

std::pair<Mask, double> knapsack_brute_force(const KnapsackInstance& inst) {
  const SetFunction& f = inst.f;
  bool any = false;
  Mask best_mask = 0;
  double best = 0.0;
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    if (f(s) > inst.b) continue;
    double obj = 0.0;
    for (int i = 0; i < f.n(); ++i) {
      if (s & (Mask{1} << i)) obj += inst.c(i);
    }
    if (!any || obj > best) {  // ties keep the smallest mask
      any = true;
      best = obj;
      best_mask = s;
    }
  }
  if (!any) throw Error(ErrorCode::Infeasible, "no feasible point");
  return {best_mask, best};
}

PointCheckReport point_checks(
    const KnapsackInstance& inst,
    const std::function<double(const Eigen::VectorXd&)>& F,
    const Eigen::VectorXd& x, const std::vector<LinearCut>& cuts) {
  PointCheckReport rep;
  rep.f_value = F(x);
  rep.objective = inst.c.dot(x);
  rep.feasible = rep.f_value <= inst.b + 1e-9;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const LinearCut& cut = cuts[i];
    if (cut.z_coeff != 0.0) continue;  // epigraph cuts need a z value
    if (cut.coeffs.dot(x) > cut.rhs + 1e-9) {
      rep.violated_cuts.push_back(static_cast<int>(i));
    }
  }
  return rep;
}

TrivialFacetReport trivial_facet_predicates(const KnapsackInstance& inst) {
  const SetFunction& f = inst.f;
  const int n = f.n();
  TrivialFacetReport rep;
  rep.full_dimensional = true;
  for (int i = 0; i < n; ++i) {
    if (f(Mask{1} << i) > inst.b) rep.full_dimensional = false;
  }
  rep.upper_bound_facet.assign(n, true);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      if (f((Mask{1} << s) | (Mask{1} << t)) > inst.b) {
        rep.upper_bound_facet[s] = false;
      }
    }
  }
  return rep;
}

}  // namespace approxsub
