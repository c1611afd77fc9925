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

#ifndef APPROXSUB_METRICS_HPP
#define APPROXSUB_METRICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "approxsub/set_function.hpp"

namespace approxsub {

struct Witness {
  Mask a = 0;
  Mask b = 0;
  int s = 0;  // element label in 1..n, 0 when unused
};

struct MetricReport {
  std::string kind;
  double value = 0.0;
  std::optional<Witness> witness;
  std::map<std::string, double> params;
  // per-ell (or per-collection-set) partial values for the summed violations
  std::vector<double> components;
};

using SubsetCollection = std::vector<Mask>;

// E[f] = max over all A,B of f(A|B) + f(A&B) - f(A) - f(B).
MetricReport global_distance(const SetFunction& f);
double global_distance_plus(const SetFunction& f);

// d^{l,k}[f]; s ranges over all of the ground set (membership in A|B allowed).
MetricReport pairwise_violation(const SetFunction& f, int ell, int k);

// D[f] = max over valid (l,k) of d^{l,k}; >= 0 since d^{0,0} = 0.
MetricReport marginal_violation(const SetFunction& f);

// Delta^{L,K}: components[l] = delta^{l,K} = sum_{k<K} d^{l,k}.
MetricReport submod_violation(const SetFunction& f, int L, int K);

// Local variants with A fixed / drawn from a collection.
MetricReport local_pairwise_violation(const SetFunction& f, Mask a, int k);
MetricReport local_submod_violation(const SetFunction& f,
                                    const SubsetCollection& c, int K);

// gamma-hat: largest gamma with gamma*(f(A|B)-f(A)) <= sum of singleton
// gains, over A subset of S, B subset of complement(A), |B| <= K.
// +inf when no constraint has a positive left side; -inf for an empty family.
double submodularity_ratio(const SetFunction& f, Mask s_mask, int K);

// phi^{A,B} = [f(A|B)-f(A)] - sum_{s in B}[f(A|{s})-f(A)].
double local_submod_index(const SetFunction& f, Mask a, Mask b);

// max phi over A subset of S (resp. A in C), B disjoint, 2 <= |B| <= K;
// 0 when the family is empty.
double submodularity_index(const SetFunction& f, Mask s_mask, int K);
double submodularity_indicator(const SetFunction& f, const SubsetCollection& c,
                               int K);

// (1-eps) g <= f <= (1+eps) g over the region: the whole power set when
// region is absent, else {A : |A \ region| <= 1}. g must certify submodular.
bool verify_eps_sandwich(const SetFunction& f, const SetFunction& g, double eps,
                         std::optional<Mask> region = std::nullopt);
double min_eps_for_pair(const SetFunction& f, const SetFunction& g,
                        std::optional<Mask> region = std::nullopt);

}  // namespace approxsub

#endif  // APPROXSUB_METRICS_HPP
