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

#include "approxsub/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "approxsub/metrics.hpp"
#include "approxsub/simplex.hpp"

namespace approxsub {

void check_cube_point(const HypercubePoint& x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw Error(ErrorCode::InvalidPoint, "point dimension mismatch");
  }
  for (int i = 0; i < n; ++i) {
    if (x(i) < -1e-12 || x(i) > 1.0 + 1e-12) {
      throw Error(ErrorCode::InvalidPoint, "coordinate outside [0,1]");
    }
  }
}

double lovasz_eval(const SetFunction& f, const HypercubePoint& x) {
  const int n = f.n();
  check_cube_point(x, n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // descending coordinate, ties by ascending element index
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x(a) > x(b); });
  double total = f(0);
  Mask chain = 0;
  for (int i = 0; i < n; ++i) {
    const Mask prev = chain;
    chain |= Mask{1} << order[i];
    total += x(order[i]) * (f(chain) - f(prev));
  }
  return total;
}

GammaVector gamma_of_perm(const SetFunction& f, const std::vector<int>& perm) {
  const int n = f.n();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::InvalidPerm, "permutation length mismatch");
  }
  Mask seen = 0;
  for (int e : perm) {
    if (e < 1 || e > n || (seen & (Mask{1} << (e - 1)))) {
      throw Error(ErrorCode::InvalidPerm, "not a permutation of 1..n");
    }
    seen |= Mask{1} << (e - 1);
  }
  GammaVector g;
  g.perm = perm;
  g.gamma = Eigen::VectorXd::Zero(n);
  Mask chain = 0;
  for (int e : perm) {
    const Mask prev = chain;
    chain |= Mask{1} << (e - 1);
    g.gamma(e - 1) = f(chain) - f(prev);
  }
  return g;
}

std::vector<GammaVector> gamma_vertices(const SetFunction& f) {
  const int n = f.n();
  if (n > 8) throw Error(ErrorCode::TooLarge, "n! enumeration capped at n=8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<GammaVector> out;
  do {
    out.push_back(gamma_of_perm(f, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

double lovasz_as_gamma_max(const SetFunction& f, const HypercubePoint& x) {
  check_cube_point(x, f.n());
  double best = -std::numeric_limits<double>::infinity();
  for (const GammaVector& g : gamma_vertices(f)) {
    best = std::max(best, g.gamma.dot(x));
  }
  return f(0) + best;
}

LpSolution convex_closure_eval(const SetFunction& f, const HypercubePoint& x) {
  const int n = f.n();
  if (n > 10) throw Error(ErrorCode::TooLarge, "closure LP capped at n=10");
  if (f(0) != 0.0) {
    throw Error(ErrorCode::NotNormalized, "closure requires f(empty) = 0");
  }
  check_cube_point(x, n);
  const int ncols = 1 << n;
  // Rows: one marginal constraint per element, plus the mass constraint.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, ncols);
  Eigen::VectorXd b(n + 1), c(ncols);
  for (int s = 0; s < ncols; ++s) {
    for (int i = 0; i < n; ++i) {
      if (s & (1 << i)) A(i, s) = 1.0;
    }
    A(n, s) = 1.0;
    c(s) = f(static_cast<Mask>(s));
  }
  for (int i = 0; i < n; ++i) b(i) = std::clamp(x(i), 0.0, 1.0);
  b(n) = 1.0;
  const LpResult lp = solve_lp_equality(A, b, c);
  if (lp.status != LpStatus::Optimal) {
    throw Error(ErrorCode::LpError, "closure LP did not solve");
  }
  LpSolution sol;
  sol.optimal = true;
  sol.objective = lp.objective;
  sol.y.assign(lp.x.data(), lp.x.data() + ncols);
  return sol;
}

SandwichReport sandwich_check(const SetFunction& f,
                              const std::vector<HypercubePoint>& xs) {
  SandwichReport rep;
  rep.budget = f.n() * marginal_violation(f).value;
  rep.pass = true;
  for (const HypercubePoint& x : xs) {
    const double fl = lovasz_eval(f, x);
    const double fc = convex_closure_eval(f, x).objective;
    const double gap = fl - fc;
    rep.max_gap = std::max(rep.max_gap, gap);
    if (gap < -1e-7 || gap > rep.budget + 1e-7) rep.pass = false;
    ++rep.points_checked;
  }
  if (!rep.pass) {
    throw Error(ErrorCode::SandwichViolation,
                "closure left the Lovasz sandwich");
  }
  return rep;
}

double lovasz_sup_distance(const SetFunction& f, const SetFunction& g) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::GroundMismatch, "sup distance needs one ground set");
  }
  double best = 0.0;
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    best = std::max(best, std::abs(f(s) - g(s)));
  }
  return best;
}

double multilinear_eval(const SetFunction& f, const HypercubePoint& x) {
  const int n = f.n();
  check_cube_point(x, n);
  double total = 0.0;
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      w *= (s & (Mask{1} << i)) ? x(i) : (1.0 - x(i));
    }
    total += f(s) * w;
  }
  return total;
}

Eigen::VectorXd multilinear_grad(const SetFunction& f,
                                 const HypercubePoint& x) {
  const int n = f.n();
  check_cube_point(x, n);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  // dF/dx_k = sum over S not containing k of [f(S+k) - f(S)] * prod weights
  for (int k = 0; k < n; ++k) {
    const Mask bk = Mask{1} << k;
    for (Mask s = 0; s <= f.full_mask(); ++s) {
      if (s & bk) continue;
      double w = 1.0;
      for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        w *= (s & (Mask{1} << i)) ? x(i) : (1.0 - x(i));
      }
      g(k) += (f(s | bk) - f(s)) * w;
    }
  }
  return g;
}

Eigen::MatrixXd multilinear_hessian(const SetFunction& f,
                                    const HypercubePoint& x) {
  const int n = f.n();
  check_cube_point(x, n);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const Mask bk = Mask{1} << k, bl = Mask{1} << l;
      double v = 0.0;
      for (Mask s = 0; s <= f.full_mask(); ++s) {
        if (s & (bk | bl)) continue;
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
          if (i == k || i == l) continue;
          w *= (s & (Mask{1} << i)) ? x(i) : (1.0 - x(i));
        }
        v += (f(s | bk | bl) - f(s | bk) - f(s | bl) + f(s)) * w;
      }
      h(k, l) = v;
      h(l, k) = v;
    }
  }
  return h;
}

HessianReport hessian_bound_check(const SetFunction& f,
                                  const std::vector<HypercubePoint>& xs,
                                  double d_bound) {
  const int n = f.n();
  HessianReport rep;
  rep.bound = std::ldexp(d_bound, n - 3);  // 2^{n-3} * bound
  rep.pass = true;
  // F is multilinear, so the cross difference is exact at any step; a
  // coarse one avoids cancellation in the h^2 divisor.
  const double step = 1e-2;
  for (const HypercubePoint& x : xs) {
    const Eigen::MatrixXd h = multilinear_hessian(f, x);
    for (int k = 0; k < n; ++k) {
      if (h(k, k) != 0.0) rep.pass = false;
      for (int l = 0; l < n; ++l) {
        if (l == k) continue;
        rep.max_offdiag = std::max(rep.max_offdiag, h(k, l));
        if (h(k, l) > rep.bound + 1e-9) rep.pass = false;
      }
    }
    // Central-difference cross-check of the closed form.
    for (int k = 0; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) {
        if (x(k) < 2 * step || x(k) > 1 - 2 * step || x(l) < 2 * step ||
            x(l) > 1 - 2 * step) {
          continue;
        }
        HypercubePoint xpp = x, xpm = x, xmp = x, xmm = x;
        xpp(k) += step; xpp(l) += step;
        xpm(k) += step; xpm(l) -= step;
        xmp(k) -= step; xmp(l) += step;
        xmm(k) -= step; xmm(l) -= step;
        const double fd =
            (multilinear_eval(f, xpp) - multilinear_eval(f, xpm) -
             multilinear_eval(f, xmp) + multilinear_eval(f, xmm)) /
            (4 * step * step);
        const double scale = std::max(1.0, std::abs(h(k, l)));
        rep.max_fd_error =
            std::max(rep.max_fd_error, std::abs(fd - h(k, l)) / scale);
      }
    }
  }
  if (rep.max_fd_error > 1e-5) rep.pass = false;
  if (!rep.pass) {
    throw Error(ErrorCode::BoundViolation, "hessian bound check failed");
  }
  return rep;
}

UpconcavityReport upconcavity_violation_sample(const SetFunction& f, int trials,
                                               std::uint64_t seed,
                                               double d_bound) {
  const int n = f.n();
  if (trials < 1) throw Error(ErrorCode::InvalidParams, "trials >= 1");
  UpconcavityReport rep;
  rep.trials = trials;
  rep.budget = n * (std::pow(n, 1.5) - 1.0) * std::ldexp(d_bound, n - 4);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    HypercubePoint x(n), u(n);
    for (int i = 0; i < n; ++i) x(i) = unit(rng);
    for (int i = 0; i < n; ++i) u(i) = unit(rng);
    // Largest t keeping x + t*u inside the cube.
    double t_max = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (u(i) > 0.0) t_max = std::min(t_max, (1.0 - x(i)) / u(i));
    }
    if (!std::isfinite(t_max)) t_max = 1.0;
    const double t1 = unit(rng) * t_max;
    const double t2 = unit(rng) * t_max;
    const double lam = unit(rng);
    const auto G = [&](double t) {
      HypercubePoint p = x + t * u;
      for (int i = 0; i < n; ++i) p(i) = std::clamp(p(i), 0.0, 1.0);
      return multilinear_eval(f, p);
    };
    const double viol =
        lam * G(t1) + (1.0 - lam) * G(t2) - G(lam * t1 + (1.0 - lam) * t2);
    rep.max_violation = std::max(rep.max_violation, viol);
  }
  rep.pass = rep.max_violation <= rep.budget + 1e-9;
  return rep;
}

}  // namespace approxsub
