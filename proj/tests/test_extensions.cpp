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

#include "approxsub/extensions.hpp"
#include "approxsub/metrics.hpp"
#include "test_util.hpp"

using namespace approxsub;
using namespace approxsub::testutil;

namespace {

HypercubePoint point3(double a, double b, double c) {
  HypercubePoint x(3);
  x << a, b, c;
  return x;
}

HypercubePoint vertex(Mask s, int n) {
  HypercubePoint x = HypercubePoint::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (s & (Mask{1} << i)) x(i) = 1.0;
  }
  return x;
}

std::vector<HypercubePoint> random_points(int n, int count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<HypercubePoint> xs;
  for (int i = 0; i < count; ++i) {
    HypercubePoint x(n);
    for (int j = 0; j < n; ++j) x(j) = unit(rng);
    xs.push_back(x);
  }
  return xs;
}

}  // namespace

TEST_SUITE_BEGIN("extensions");

TEST_CASE("lovasz evaluation") {
  const SetFunction h = pair_bonus();
  CHECK(lovasz_eval(h, point3(0.5, 0.8, 0.3)) == doctest::Approx(0.3));
  for (Mask s = 0; s < 8; ++s) {
    CHECK(lovasz_eval(h, vertex(s, 3)) == h(s));
  }
  const SetFunction w = modular_from_weights({3, 1, 2});
  CHECK(lovasz_eval(w, point3(0.5, 0.8, 0.3)) == doctest::Approx(2.9));
  CHECK_THROWS_AS(lovasz_eval(h, point3(1.5, 0, 0)), Error);
}

TEST_CASE("lovasz positive homogeneity and tie independence") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction f = random_increasing(5, rng);
    for (const HypercubePoint& x : random_points(5, 10, 100 + trial)) {
      const double v = lovasz_eval(f, x);
      for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
        CHECK(lovasz_eval(f, alpha * x) == doctest::Approx(alpha * v));
      }
    }
    // ties: any valid ranking permutation gives the same value
    HypercubePoint tied(5);
    tied << 0.4, 0.7, 0.4, 0.7, 0.1;
    double expect = 0.0;
    // hand telescoping with the other tie order (3 before 1, 4 before 2)
    const int order[5] = {3, 1, 2, 0, 4};
    Mask chain = 0;
    for (int i : order) {
      const Mask prev = chain;
      chain |= Mask{1} << i;
      expect += tied(i) * (f(chain) - f(prev));
    }
    CHECK(lovasz_eval(f, tied) == doctest::Approx(expect));
  }
}

TEST_CASE("gamma vectors") {
  const SetFunction f(2, {0, 1, 1, 4});
  const GammaVector g = gamma_of_perm(f, {1, 2});
  CHECK(g.gamma(0) == 1);
  CHECK(g.gamma(1) == 3);

  const SetFunction w = modular_from_weights({3, 1, 2});
  for (const GammaVector& gv : gamma_vertices(w)) {
    CHECK(gv.gamma(0) == 3);
    CHECK(gv.gamma(1) == 1);
    CHECK(gv.gamma(2) == 2);
  }

  const GammaVector gp = gamma_of_perm(pair_bonus(), {2, 3, 1});
  CHECK(gp.gamma(1) == 0);
  CHECK(gp.gamma(2) == 1);
  CHECK(gp.gamma(0) == 0);

  CHECK_THROWS_AS(gamma_of_perm(w, {1, 1, 2}), Error);
}

TEST_CASE("lovasz as a max over gamma vectors") {
  // chain vectors from non-sorting orders can overshoot the extension, but
  // never by more than the n*D budget; under submodularity they never do
  const SetFunction h = pair_bonus();
  const double gm = lovasz_as_gamma_max(h, point3(0.5, 0.8, 0.3));
  CHECK(gm == doctest::Approx(0.8));  // order (3,2,1) puts the bonus on x2
  CHECK(gm >= lovasz_eval(h, point3(0.5, 0.8, 0.3)) - 1e-9);
  CHECK(lovasz_as_gamma_max(h, vertex(0b110, 3)) == doctest::Approx(1.0));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction f = random_increasing(4, rng);
    const double budget = 4 * marginal_violation(f).value;
    const bool submod = certify_flags(f).submodular;
    for (const HypercubePoint& x : random_points(4, 10, 200 + trial)) {
      const double fl = lovasz_eval(f, x);
      const double gmax = lovasz_as_gamma_max(f, x);
      CHECK(gmax >= fl - 1e-9);
      CHECK(gmax <= fl + budget + 1e-9);
      if (submod) CHECK(gmax == doctest::Approx(fl));
    }
  }
}

TEST_CASE("convex closure") {
  const SetFunction h = pair_bonus();
  HypercubePoint x = point3(0.0, 1.0, 0.5);
  CHECK(convex_closure_eval(h, x).objective == doctest::Approx(0.5));
  CHECK(convex_closure_eval(h, vertex(0b110, 3)).objective ==
        doctest::Approx(1.0));
  const SetFunction w = modular_from_weights({3, 1, 2});
  for (const HypercubePoint& p : random_points(3, 20, 41)) {
    CHECK(convex_closure_eval(w, p).objective ==
          doctest::Approx(w(1) * p(0) + w(2) * p(1) + w(4) * p(2)));
  }
  // distribution invariants at the optimum
  const LpSolution sol = convex_closure_eval(h, x);
  double mass = 0.0;
  Eigen::VectorXd marg = Eigen::VectorXd::Zero(3);
  for (Mask s = 0; s < 8; ++s) {
    CHECK(sol.y[s] >= -1e-9);
    mass += sol.y[s];
    for (int i = 0; i < 3; ++i) {
      if (s & (Mask{1} << i)) marg(i) += sol.y[s];
    }
  }
  CHECK(mass == doctest::Approx(1.0));
  for (int i = 0; i < 3; ++i) CHECK(marg(i) == doctest::Approx(x(i)));

  CHECK_THROWS_AS(convex_closure_eval(SetFunction(2, {1, 1, 1, 1}),
                                      vertex(0, 2)),
                  Error);
}

TEST_CASE("sandwich between lovasz and closure") {
  const SetFunction h = pair_bonus();
  const SandwichReport rep = sandwich_check(h, random_points(3, 100, 43));
  CHECK(rep.pass);
  CHECK(rep.max_gap <= rep.budget + 1e-7);
  CHECK(rep.budget == doctest::Approx(3.0));

  // submodular: the two extensions coincide
  const SetFunction cc = capped_cardinality();
  for (const HypercubePoint& x : random_points(3, 30, 47)) {
    CHECK(lovasz_eval(cc, x) ==
          doctest::Approx(convex_closure_eval(cc, x).objective)
              .epsilon(1e-7));
  }

  // gamma-based dual feasibility: every chain vector obeys the slack bound
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    const SetFunction f = random_increasing(4, rng);
    const double d = marginal_violation(f).value;
    for (const GammaVector& g : gamma_vertices(f)) {
      for (Mask s = 0; s <= f.full_mask(); ++s) {
        double lhs = 0.0;
        for (int i = 0; i < 4; ++i) {
          if (s & (Mask{1} << i)) lhs += g.gamma(i);
        }
        CHECK(f(s) >= -cardinality(s) * d + lhs - 1e-9);
      }
    }
  }
}

TEST_CASE("approximate convexity of the lovasz extension") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction f = random_increasing(4, rng);
    const double budget = 4 * marginal_violation(f).value;
    const auto xs = random_points(4, 10, 300 + trial);
    const auto ys = random_points(4, 10, 400 + trial);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
      const double lam = unit(rng);
      const HypercubePoint mid = lam * xs[i] + (1.0 - lam) * ys[i];
      CHECK(lovasz_eval(f, mid) <= lam * lovasz_eval(f, xs[i]) +
                                       (1.0 - lam) * lovasz_eval(f, ys[i]) +
                                       budget + 1e-9);
    }
    // converse at vertex midpoints: measured violation covers the
    // union-intersection surplus
    for (Mask s = 0; s <= f.full_mask(); ++s) {
      for (Mask t = 0; t <= f.full_mask(); ++t) {
        const HypercubePoint mid =
            0.5 * (vertex(s, 4) + vertex(t, 4));
        // convexity violation at the midpoint (negative when convexity holds)
        const double viol = lovasz_eval(f, mid) - 0.5 * (f(s) + f(t));
        CHECK(0.5 * (f(s) + f(t)) + viol + 1e-9 >=
              0.5 * (f(s & t) + f(s | t)));
      }
    }
  }
}

TEST_CASE("lovasz sup distance is attained at a vertex") {
  const SetFunction h = pair_bonus();
  const SetFunction zero = modular_from_weights({0, 0, 0});
  CHECK(lovasz_sup_distance(h, zero) == 1.0);
  CHECK(lovasz_sup_distance(h, h) == 0.0);
  CHECK(lovasz_sup_distance(h, scale(h, 0.25)) == 0.75);
  // no sampled point exceeds the vertex max
  for (const HypercubePoint& x : random_points(3, 50, 59)) {
    CHECK(std::abs(lovasz_eval(h, x) - lovasz_eval(zero, x)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("multilinear extension and derivatives") {
  const SetFunction h = pair_bonus();
  CHECK(multilinear_eval(h, point3(0.5, 0.8, 0.3)) == doctest::Approx(0.24));
  for (Mask s = 0; s < 8; ++s) {
    CHECK(multilinear_eval(h, vertex(s, 3)) == doctest::Approx(h(s)));
  }
  const SetFunction w = modular_from_weights({3, 1, 2});
  for (const HypercubePoint& x : random_points(3, 10, 61)) {
    CHECK(multilinear_eval(w, x) ==
          doctest::Approx(3 * x(0) + x(1) + 2 * x(2)));
    CHECK(multilinear_hessian(w, x).norm() == doctest::Approx(0.0));
  }
  // F^M = x2 x3 for the pair bonus: hessian entry (2,3) is 1
  const Eigen::MatrixXd hess = multilinear_hessian(h, point3(0.2, 0.4, 0.9));
  CHECK(hess(1, 2) == doctest::Approx(1.0));
  CHECK(hess(0, 1) == doctest::Approx(0.0));
  for (int i = 0; i < 3; ++i) CHECK(hess(i, i) == 0.0);

  // gradient against central differences
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    const SetFunction f = random_increasing(4, rng);
    for (const HypercubePoint& x : random_points(4, 5, 500 + trial)) {
      const Eigen::VectorXd g = multilinear_grad(f, x);
      for (int i = 0; i < 4; ++i) {
        if (x(i) < 1e-4 || x(i) > 1 - 1e-4) continue;
        HypercubePoint xp = x, xm = x;
        xp(i) += 1e-5;
        xm(i) -= 1e-5;
        const double fd =
            (multilinear_eval(f, xp) - multilinear_eval(f, xm)) / 2e-5;
        CHECK(g(i) == doctest::Approx(fd).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("hessian bound and up-concavity sampling") {
  const SetFunction h = pair_bonus();
  const double d = marginal_violation(h).value;
  const HessianReport rep =
      hessian_bound_check(h, random_points(3, 50, 71), d);
  CHECK(rep.pass);
  CHECK(rep.max_offdiag == doctest::Approx(1.0));
  CHECK(rep.bound == doctest::Approx(1.0));  // 2^{3-3} * 1

  const SetFunction w = modular_from_weights({3, 1, 2});
  const UpconcavityReport up0 = upconcavity_violation_sample(w, 2000, 42, 0.0);
  CHECK(up0.max_violation <= 1e-9);

  const SetFunction cc = capped_cardinality();
  const UpconcavityReport up1 =
      upconcavity_violation_sample(cc, 2000, 42, 0.0);
  CHECK(up1.max_violation <= 1e-9);

  const UpconcavityReport up2 = upconcavity_violation_sample(h, 2000, 42, d);
  CHECK(up2.pass);
  // determinism under a fixed seed
  const UpconcavityReport up3 = upconcavity_violation_sample(h, 2000, 42, d);
  CHECK(up2.max_violation == up3.max_violation);
}

TEST_SUITE_END();
