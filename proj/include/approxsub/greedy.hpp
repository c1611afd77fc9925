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

#ifndef APPROXSUB_GREEDY_HPP
#define APPROXSUB_GREEDY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "approxsub/metrics.hpp"
#include "approxsub/set_function.hpp"

namespace approxsub {

struct GreedyTrace {
  std::vector<int> chosen;        // elements s_1..s_L
  std::vector<Mask> prefix_sets;  // {empty, S_1, ..., S_L}
  std::vector<double> values;     // f(S_l) for l = 1..L
  Mask final_set() const { return prefix_sets.back(); }
  int length() const { return static_cast<int>(chosen.size()); }
};

struct BoundReport {
  std::string name;  // nemhauser|delta|local_delta|indicator|ratio|index|horel
  double value = 0.0;
  bool applicable = true;
  std::map<std::string, double> inputs;
};

// Ties broken by smallest element index; elements never repeated.
GreedyTrace greedy_run(const SetFunction& f, int L);

// Exhaustive max over |S| <= K; ties -> smallest mask.
std::pair<Mask, double> brute_force_opt(const SetFunction& f, int K);

double bound_nemhauser(double f_opt, int K, int L);

BoundReport bound_delta(const SetFunction& f, int K, int L);
BoundReport bound_local_delta(const SetFunction& f, const GreedyTrace& trace,
                              int K);
BoundReport bound_indicator(const SetFunction& f, const GreedyTrace& trace,
                            int K);
BoundReport bound_ratio(const SetFunction& f, const GreedyTrace& trace, int K);
// Requires L = K, index in (0, f_opt], and greedy value > 0; otherwise the
// report is flagged not applicable.
BoundReport bound_index(const SetFunction& f, const GreedyTrace& trace_k);
// eps in (0,1); the sandwich against g must verify over the region
// S_L | opt-set, else NotCertified.
BoundReport bound_horel(const SetFunction& f, const GreedyTrace& trace, int K,
                        double eps, const SetFunction& g);

struct BoundSuite {
  GreedyTrace trace;
  Mask opt_set = 0;
  double opt_value = 0.0;
  double greedy_value = 0.0;
  std::vector<BoundReport> bounds;
};

BoundSuite bound_suite(const SetFunction& f, int K, int L,
                       const SetFunction* horel_g = nullptr,
                       std::optional<double> horel_eps = std::nullopt);

}  // namespace approxsub

#endif  // APPROXSUB_GREEDY_HPP
