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

#include <doctest.h>

#include <cmath>
#include <random>

#include "approxsub/greedy.hpp"
#include "approxsub/instances.hpp"
#include "test_util.hpp"

using namespace approxsub;
using namespace approxsub::testutil;

TEST_SUITE_BEGIN("greedy");

TEST_CASE("greedy trajectory") {
  const SetFunction w = modular_from_weights({3, 1, 2});
  const GreedyTrace t = greedy_run(w, 2);
  CHECK(t.chosen == std::vector<int>{1, 3});
  CHECK(t.values == std::vector<double>{3, 5});

  // the classic adversarial facility walk: lowest-index tie-breaks
  CuflpInstance inst = build_cuflp(1.0);
  inst.u.setZero();
  const SetFunction f = cuflp_table(inst);
  const GreedyTrace tf = greedy_run(f, 4);
  CHECK(tf.chosen == std::vector<int>{1, 2, 3, 4});
  CHECK(tf.values == std::vector<double>{192, 336, 444, 525});

  const GreedyTrace th = greedy_run(pair_bonus(), 1);
  CHECK(th.chosen == std::vector<int>{1});
  CHECK(th.values == std::vector<double>{0});

  CHECK_THROWS_AS(greedy_run(w, 4), Error);
}

TEST_CASE("brute force optimum") {
  CuflpInstance inst = build_cuflp(1.0);
  inst.u.setZero();
  const SetFunction f = cuflp_table(inst);
  const auto [mask, value] = brute_force_opt(f, 4);
  CHECK(mask == 0b1111000);  // facilities {4,5,6,7}
  CHECK(value == 768);

  CHECK(brute_force_opt(pair_bonus(), 2) ==
        std::pair<Mask, double>{0b110, 1.0});
  CHECK(brute_force_opt(modular_from_weights({3, 1, 2}), 1) ==
        std::pair<Mask, double>{1, 3.0});
}

TEST_CASE("nemhauser bound") {
  CHECK(bound_nemhauser(768, 4, 4) == 525.0);  // dyadic data, exact
  CHECK(bound_nemhauser(10, 3, 0) == 0.0);
  CHECK(bound_nemhauser(10, 1, 1) == 10.0);
}

TEST_CASE("delta bound tightness on the facility instance") {
  CuflpInstance inst = build_cuflp(1.0);
  inst.u.setZero();
  const SetFunction f = cuflp_table(inst);
  const BoundReport r = bound_delta(f, 4, 4);
  CHECK(r.value == 525.0);  // Delta vanishes, integer arithmetic
  CHECK(r.inputs.at("Delta") == 0.0);

  const SetFunction h = cuflp_table(build_cuflp(1.0));
  const GreedyTrace th = greedy_run(h, 4);
  const BoundReport rh = bound_delta(h, 4, 4);
  CHECK(rh.value < r.value);
  CHECK(rh.value <= h(th.final_set()) + 1e-9);
}

TEST_CASE("bound family on random functions") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const SetFunction f = random_increasing(5, rng);
    for (int K = 1; K <= 5; ++K) {
      const GreedyTrace trace = greedy_run(f, K);
      const double greedy_value = f(trace.final_set());
      const BoundReport d = bound_delta(f, K, K);
      const BoundReport ld = bound_local_delta(f, trace, K);
      const BoundReport in = bound_indicator(f, trace, K);
      const BoundReport ra = bound_ratio(f, trace, K);
      const BoundReport ix = bound_index(f, trace);
      CHECK(d.value <= greedy_value + 1e-9);
      CHECK(ld.value <= greedy_value + 1e-9);
      CHECK(in.value <= greedy_value + 1e-9);
      CHECK(ra.value <= greedy_value + 1e-9);
      CHECK(ld.value >= d.value - 1e-9);
      if (ix.applicable) {
        CHECK(ix.value <= greedy_value + 1e-9);
        CHECK(in.value >= ix.value - 1e-9);
      }
    }
  }
}

TEST_CASE("submodular reduction") {
  const SetFunction cc = capped_cardinality();
  for (int K = 1; K <= 3; ++K) {
    const GreedyTrace trace = greedy_run(cc, K);
    const double opt = brute_force_opt(cc, K).second;
    const BoundReport ld = bound_local_delta(cc, trace, K);
    CHECK(ld.value >= bound_nemhauser(opt, K, K) - 1e-9);
    const BoundReport d = bound_delta(cc, K, K);
    // Delta <= 0 never weakens the coefficient form
    CHECK(d.value >= bound_nemhauser(opt, K, K) - 1e-9);
  }
}

TEST_CASE("index bound hypotheses") {
  const GreedyTrace empty_trace = greedy_run(pair_bonus(), 0);
  CHECK_FALSE(bound_index(pair_bonus(), empty_trace).applicable);
  // greedy value 0 on the pair bonus at L=K=1 and the index is 0: both fail
  const GreedyTrace t1 = greedy_run(pair_bonus(), 1);
  CHECK_FALSE(bound_index(pair_bonus(), t1).applicable);
}

TEST_CASE("horel bound") {
  const SetFunction h = cuflp_table(build_cuflp(1.0));
  CuflpInstance base = build_cuflp(1.0);
  base.u.setZero();
  const SetFunction f0 = cuflp_table(base);
  const double eps = min_eps_for_pair(h, f0);
  const GreedyTrace trace = greedy_run(h, 4);
  const BoundReport r = bound_horel(h, trace, 4, eps, f0);
  CHECK(r.value <= h(trace.final_set()) + 1e-9);
  CHECK(r.value > 0.0);

  // eps -> 0 recovers the classic coefficient
  const BoundReport tiny = bound_horel(f0, greedy_run(f0, 4), 4, 1e-9, f0);
  const double nem = bound_nemhauser(brute_force_opt(f0, 4).second, 4, 4);
  CHECK(std::abs(tiny.value - nem) / nem < 1e-6);

  CHECK_THROWS_AS(bound_horel(h, trace, 4, 1.5, f0), Error);
  CHECK_THROWS_AS(bound_horel(h, trace, 4, eps / 2, f0), Error);
}

TEST_CASE("bound suite") {
  const SetFunction h = cuflp_table(build_cuflp(1.0));
  const BoundSuite suite = bound_suite(h, 4, 4);
  CHECK(suite.greedy_value > 0.0);
  CHECK(suite.opt_value >= suite.greedy_value);
  for (const BoundReport& b : suite.bounds) {
    if (b.applicable && b.name != "nemhauser") {
      CHECK(b.value <= suite.greedy_value + 1e-9);
    }
  }
  // single-element ground set: everything collapses to f({1})
  const SetFunction single(1, {0, 7});
  const BoundSuite s1 = bound_suite(single, 1, 1);
  CHECK(s1.greedy_value == 7.0);
  for (const BoundReport& b : s1.bounds) {
    if (!b.applicable) continue;
    if (b.name == "ratio") {
      // gamma-hat is exactly 1 here, so the coefficient is 1 - 1/e
      CHECK(b.value == doctest::Approx((1.0 - std::exp(-1.0)) * 7.0));
    } else {
      CHECK(b.value == doctest::Approx(7.0));
    }
  }
}

TEST_SUITE_END();
