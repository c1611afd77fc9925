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

#include "approxsub/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace approxsub {

GreedyTrace greedy_run(const SetFunction& f, int L) {
  const int n = f.n();
  if (L < 0 || L > n) {
    throw Error(ErrorCode::InvalidParams, "greedy length must be in [0, n]");
  }
  GreedyTrace trace;
  trace.prefix_sets.push_back(0);
  Mask current = 0;
  for (int step = 0; step < L; ++step) {
    int best_elem = -1;
    double best_value = 0.0;
    for (int i = 0; i < n; ++i) {
      const Mask bi = Mask{1} << i;
      if (current & bi) continue;
      const double v = f(current | bi);
      if (best_elem < 0 || v > best_value) {  // ties keep the lowest index
        best_elem = i;
        best_value = v;
      }
    }
    current |= Mask{1} << best_elem;
    trace.chosen.push_back(best_elem + 1);
    trace.prefix_sets.push_back(current);
    trace.values.push_back(best_value);
  }
  return trace;
}

std::pair<Mask, double> brute_force_opt(const SetFunction& f, int K) {
  if (K < 0 || K > f.n()) {
    throw Error(ErrorCode::InvalidParams, "cardinality bound out of range");
  }
  Mask best_mask = 0;
  double best = f(0);
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    if (cardinality(s) > K) continue;
    if (f(s) > best) {  // ties keep the smallest mask
      best = f(s);
      best_mask = s;
    }
  }
  return {best_mask, best};
}

double bound_nemhauser(double f_opt, int K, int L) {
  if (K < 1 || L < 0) {
    throw Error(ErrorCode::InvalidParams, "nemhauser bound range");
  }
  return f_opt * (1.0 - std::pow(1.0 - 1.0 / K, L));
}

namespace {

double greedy_factor(int K, int L) {
  return 1.0 - std::pow(1.0 - 1.0 / K, L);
}

}  // namespace

BoundReport bound_delta(const SetFunction& f, int K, int L) {
  if (K < 1 || K > f.n() || L < 0 || L > f.n()) {
    throw Error(ErrorCode::InvalidParams, "delta bound range");
  }
  const double f_opt = brute_force_opt(f, K).second;
  // Prefix sets in the analysis have at most n-1 elements.
  const double delta = submod_violation(f, std::min(L, f.n() - 1), K).value;
  BoundReport r;
  r.name = "delta";
  r.inputs["K"] = K;
  r.inputs["L"] = L;
  r.inputs["f_opt"] = f_opt;
  r.inputs["Delta"] = delta;
  r.value = (f_opt - std::min(delta, f_opt)) * greedy_factor(K, L);
  return r;
}

BoundReport bound_local_delta(const SetFunction& f, const GreedyTrace& trace,
                              int K) {
  if (K < 1 || K > f.n()) {
    throw Error(ErrorCode::InvalidParams, "local delta bound range");
  }
  const int L = trace.length();
  const double f_opt = brute_force_opt(f, K).second;
  const double delta_hat =
      local_submod_violation(f, trace.prefix_sets, K).value;
  BoundReport r;
  r.name = "local_delta";
  r.inputs["K"] = K;
  r.inputs["L"] = L;
  r.inputs["f_opt"] = f_opt;
  r.inputs["Delta_hat"] = delta_hat;
  r.value = (f_opt - std::min(delta_hat, f_opt)) * greedy_factor(K, L);
  return r;
}

BoundReport bound_indicator(const SetFunction& f, const GreedyTrace& trace,
                            int K) {
  if (K < 1 || K > f.n()) {
    throw Error(ErrorCode::InvalidParams, "indicator bound range");
  }
  const int L = trace.length();
  const double f_opt = brute_force_opt(f, K).second;
  const double ind = submodularity_indicator(f, trace.prefix_sets, K);
  BoundReport r;
  r.name = "indicator";
  r.inputs["K"] = K;
  r.inputs["L"] = L;
  r.inputs["f_opt"] = f_opt;
  r.inputs["indicator"] = ind;
  r.value = std::min(
      f_opt, greedy_factor(K, L) * (f_opt - std::min(ind, f_opt)));
  return r;
}

BoundReport bound_ratio(const SetFunction& f, const GreedyTrace& trace,
                        int K) {
  if (K < 1 || K > f.n()) {
    throw Error(ErrorCode::InvalidParams, "ratio bound range");
  }
  const double f_opt = brute_force_opt(f, K).second;
  const double gamma = submodularity_ratio(f, trace.final_set(), K);
  BoundReport r;
  r.name = "ratio";
  r.inputs["K"] = K;
  r.inputs["L"] = trace.length();
  r.inputs["f_opt"] = f_opt;
  r.inputs["gamma"] = gamma;
  // exponent carries the L/K iteration factor; without it the coefficient
  // is already positive at L = 0, which no greedy run can honor
  const int L = trace.length();
  if (L == 0) {
    r.value = 0.0;
  } else if (std::isinf(gamma) && gamma > 0.0) {
    r.value = f_opt;
  } else {
    r.value = (1.0 - std::exp(-gamma * L / K)) * f_opt;
  }
  return r;
}

BoundReport bound_index(const SetFunction& f, const GreedyTrace& trace_k) {
  const int K = trace_k.length();
  BoundReport r;
  r.name = "index";
  if (K < 1) {
    r.applicable = false;
    return r;
  }
  const double f_opt = brute_force_opt(f, K).second;
  const double greedy_value = f(trace_k.final_set());
  const double index = submodularity_index(f, trace_k.final_set(), K);
  r.inputs["K"] = K;
  r.inputs["L"] = K;
  r.inputs["f_opt"] = f_opt;
  r.inputs["index"] = index;
  r.inputs["greedy_value"] = greedy_value;
  if (!(index > 0.0) || index > f_opt || !(greedy_value > 0.0)) {
    r.applicable = false;
    return r;
  }
  r.value = (1.0 - std::exp(-1.0) - index / greedy_value) * f_opt;
  // The variant that divides by the optimum instead; recorded when distinct.
  const double alt = (1.0 - std::exp(-1.0) - index / f_opt) * f_opt;
  if (alt != r.value) r.inputs["value_opt_denominator"] = alt;
  return r;
}

BoundReport bound_horel(const SetFunction& f, const GreedyTrace& trace, int K,
                        double eps, const SetFunction& g) {
  if (K < 1 || K > f.n()) {
    throw Error(ErrorCode::InvalidParams, "horel bound range");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw Error(ErrorCode::InvalidParams, "horel bound needs eps in (0,1)");
  }
  const int L = trace.length();
  const auto [opt_set, f_opt] = brute_force_opt(f, K);
  const Mask region = trace.final_set() | opt_set;
  if (!verify_eps_sandwich(f, g, eps, region)) {
    throw Error(ErrorCode::NotCertified, "eps sandwich failed on the region");
  }
  BoundReport r;
  r.name = "horel";
  r.inputs["K"] = K;
  r.inputs["L"] = L;
  r.inputs["f_opt"] = f_opt;
  r.inputs["eps"] = eps;
  const double om = 1.0 - eps, op = 1.0 + eps;
  const double coeff = om * om * f_opt / (4.0 * K * eps + om * om);
  const double ratio = (K - 1) * om * om / (K * op * op);
  r.value = coeff * (1.0 - std::pow(ratio, L));
  return r;
}

BoundSuite bound_suite(const SetFunction& f, int K, int L,
                       const SetFunction* horel_g,
                       std::optional<double> horel_eps) {
  BoundSuite suite;
  suite.trace = greedy_run(f, L);
  std::tie(suite.opt_set, suite.opt_value) = brute_force_opt(f, K);
  suite.greedy_value = f(suite.trace.final_set());

  BoundReport nem;
  nem.name = "nemhauser";
  nem.value = bound_nemhauser(suite.opt_value, K, L);
  nem.inputs["K"] = K;
  nem.inputs["L"] = L;
  nem.inputs["f_opt"] = suite.opt_value;
  suite.bounds.push_back(std::move(nem));

  suite.bounds.push_back(bound_delta(f, K, L));
  suite.bounds.push_back(bound_local_delta(f, suite.trace, K));
  suite.bounds.push_back(bound_indicator(f, suite.trace, K));
  suite.bounds.push_back(bound_ratio(f, suite.trace, K));
  if (L == K) {
    suite.bounds.push_back(bound_index(f, suite.trace));
  }
  if (horel_g != nullptr && horel_eps && *horel_eps > 0.0 &&
      *horel_eps < 1.0) {
    suite.bounds.push_back(bound_horel(f, suite.trace, K, *horel_eps,
                                       *horel_g));
  }
  return suite;
}

}  // namespace approxsub
