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

#include "approxsub/extensions.hpp"
#include "approxsub/instances.hpp"
#include "approxsub/metrics.hpp"
#include "test_util.hpp"

using namespace approxsub;
using namespace approxsub::testutil;

TEST_SUITE_BEGIN("instances");

TEST_CASE("knapsack instance values") {
  const KnapsackInstance inst = build_ask();
  CHECK(inst.f(0) == 0.0);
  CHECK(inst.f(0b001111) == doctest::Approx(36.0));
  CHECK(inst.f(0b110000) ==
        doctest::Approx(8.85 + std::pow(2.0, 1.1)));
  CHECK(inst.b == 28.3);

  const AskInstance data = ask_data();
  const double bound = ask_D_bound(data);
  CHECK(bound == doctest::Approx(1.1 * std::pow(2.0, 0.1)));
  CHECK(marginal_violation(inst.f).value <= bound + 1e-12);

  AskInstance no_w = data;
  no_w.w.setZero();
  CHECK(ask_D_bound(no_w) == 0.0);
}

TEST_CASE("facility instance tables") {
  CuflpInstance base = build_cuflp(1.0);
  base.u.setZero();
  const SetFunction f = cuflp_table(base);
  CHECK(f(0) == 0.0);
  CHECK(f(0b1111000) == 768.0);
  CHECK(f(0b0000001) == 192.0);  // facility 1 serves its block of four at 48

  const SetFunction h = cuflp_table(build_cuflp(1.0));
  CHECK(h(0b1100000) == 409.0);  // {6,7}: six clients at 64 plus the bonus
  CHECK(h(0) == 0.0);

  const FunctionFlags flags = certify_flags(f);
  CHECK(flags.nonneg);
  CHECK(flags.increasing);
  CHECK(flags.submodular);
  CHECK_FALSE(certify_flags(h).submodular);

  CHECK_THROWS_AS(build_cuflp(0.0), Error);
}

TEST_CASE("bonus scaling") {
  const SetFunction f = [] {
    CuflpInstance b = build_cuflp(1.0);
    b.u.setZero();
    return cuflp_table(b);
  }();
  const SetFunction h1 = cuflp_table(build_cuflp(1.0));
  const SetFunction h2 = cuflp_table(build_cuflp(2.0));
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    CHECK(h1(s) >= f(s));
    CHECK(h2(s) >= f(s));
    CHECK(h1(s) >= h2(s));  // larger divisor, smaller bonus
  }
}

TEST_CASE("analytic violation bounds") {
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    const CuflpInstance inst = build_cuflp(t);
    const double d_prime = cuflp_near_bound(inst);
    CHECK(d_prime == doctest::Approx(25.0 / t));
    const SetFunction h = cuflp_table(inst);
    CHECK(marginal_violation(h).value <= d_prime + 1e-9);
    CHECK(cuflp_lovasz_budget(inst) == doctest::Approx(7.0 * 25.0 / t));
  }
  CuflpInstance none = build_cuflp(1.0);
  none.u.setZero();
  CHECK(cuflp_near_bound(none) == 0.0);
}

TEST_CASE("three-facility bonus example") {
  // one client worth nothing, a single pairwise bonus: the pair-bonus table
  CuflpInstance inst;
  inst.m = 3;
  inst.n_clients = 1;
  inst.v = Eigen::MatrixXd::Zero(3, 1);
  inst.b_dem = Eigen::VectorXd::Ones(1);
  inst.u = Eigen::MatrixXd::Zero(3, 3);
  inst.u(1, 2) = 1.0;
  const SetFunction h = cuflp_table(inst);
  for (Mask s = 0; s < 8; ++s) CHECK(h(s) == pair_bonus()(s));
  CHECK(pairwise_violation(h, 1, 1).value == 1.0);
  CHECK_FALSE(certify_flags(h).submodular);
}

TEST_SUITE_END();
