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

#include "approxsub/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace approxsub {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Cell {
  double value = -kInf;
  Witness witness;
  bool seen = false;
};

// All d^{l,k} values (with lex-first witnesses) in one sweep over (A, B, s).
// Ascending (A, B, s) with strict-greater updates gives the smallest witness.
std::vector<std::vector<Cell>> pairwise_table(const SetFunction& f) {
  const int n = f.n();
  const Mask full = f.full_mask();
  std::vector<std::vector<Cell>> table(n, std::vector<Cell>(n + 1));
  for (Mask a = 0; a <= full; ++a) {
    const int ell = cardinality(a);
    if (ell > n - 1) continue;
    const double fa = f(a);
    for (Mask b = 0; b <= full; ++b) {
      const Mask ab = a | b;
      const double base = fa - f(ab);
      Cell* cell = &table[ell][cardinality(b)];
      for (int s = 0; s < n; ++s) {
        const Mask bs = Mask{1} << s;
        const double v = f(ab | bs) - f(a | bs) + base;
        if (!cell->seen || v > cell->value) {
          cell->seen = true;
          cell->value = v;
          cell->witness = {a, b, s + 1};
        }
      }
    }
  }
  return table;
}

}  // namespace

MetricReport global_distance(const SetFunction& f) {
  const Mask full = f.full_mask();
  MetricReport r;
  r.kind = "global_distance";
  bool seen = false;
  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = 0; b <= full; ++b) {
      const double v = f(a | b) + f(a & b) - f(a) - f(b);
      if (!seen || v > r.value) {
        seen = true;
        r.value = v;
        r.witness = Witness{a, b, 0};
      }
    }
  }
  return r;
}

double global_distance_plus(const SetFunction& f) {
  return std::max(0.0, global_distance(f).value);
}

MetricReport pairwise_violation(const SetFunction& f, int ell, int k) {
  const int n = f.n();
  if (ell < 0 || ell > n - 1 || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidParams, "pairwise violation range");
  }
  const auto table = pairwise_table(f);
  MetricReport r;
  r.kind = "pairwise_violation";
  r.params["l"] = ell;
  r.params["k"] = k;
  r.value = table[ell][k].value;
  r.witness = table[ell][k].witness;
  return r;
}

MetricReport marginal_violation(const SetFunction& f) {
  const int n = f.n();
  const auto table = pairwise_table(f);
  MetricReport r;
  r.kind = "marginal_violation";
  bool seen = false;
  for (int ell = 0; ell <= n - 1; ++ell) {
    for (int k = 0; k <= n; ++k) {
      if (!seen || table[ell][k].value > r.value) {
        seen = true;
        r.value = table[ell][k].value;
        r.witness = table[ell][k].witness;
        r.params["l"] = ell;
        r.params["k"] = k;
      }
    }
  }
  return r;
}

MetricReport submod_violation(const SetFunction& f, int L, int K) {
  const int n = f.n();
  if (L < 0 || L > n - 1 || K < 1 || K > n) {
    throw Error(ErrorCode::InvalidParams, "submod violation range");
  }
  const auto table = pairwise_table(f);
  MetricReport r;
  r.kind = "submod_violation";
  r.params["L"] = L;
  r.params["K"] = K;
  r.components.resize(L + 1);
  for (int ell = 0; ell <= L; ++ell) {
    double delta = 0.0;
    for (int k = 0; k < K; ++k) delta += table[ell][k].value;
    r.components[ell] = delta;
    if (ell == 0 || delta > r.value) r.value = delta;
  }
  return r;
}

MetricReport local_pairwise_violation(const SetFunction& f, Mask a, int k) {
  const int n = f.n();
  if (a > f.full_mask() || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidParams, "local pairwise violation range");
  }
  MetricReport r;
  r.kind = "local_pairwise_violation";
  r.params["k"] = k;
  const double fa = f(a);
  bool seen = false;
  for (Mask b = 0; b <= f.full_mask(); ++b) {
    if (cardinality(b) != k) continue;
    const Mask ab = a | b;
    const double base = fa - f(ab);
    for (int s = 0; s < n; ++s) {
      const Mask bs = Mask{1} << s;
      const double v = f(ab | bs) - f(a | bs) + base;
      if (!seen || v > r.value) {
        seen = true;
        r.value = v;
        r.witness = Witness{a, b, s + 1};
      }
    }
  }
  return r;
}

MetricReport local_submod_violation(const SetFunction& f,
                                    const SubsetCollection& c, int K) {
  if (c.empty() || K < 1 || K > f.n()) {
    throw Error(ErrorCode::InvalidParams, "local submod violation range");
  }
  MetricReport r;
  r.kind = "local_submod_violation";
  r.params["K"] = K;
  r.components.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    double delta = 0.0;
    for (int k = 0; k < K; ++k) {
      delta += local_pairwise_violation(f, c[i], k).value;
    }
    r.components.push_back(delta);
    if (i == 0 || delta > r.value) {
      r.value = delta;
      r.witness = Witness{c[i], 0, 0};
    }
  }
  return r;
}

double submodularity_ratio(const SetFunction& f, Mask s_mask, int K) {
  const int n = f.n();
  if (K < 1) throw Error(ErrorCode::InvalidParams, "ratio needs K >= 1");
  for (double v : f.values()) {
    if (v < 0.0) {
      throw Error(ErrorCode::NotNonnegative, "ratio requires f >= 0");
    }
  }
  double best = kInf;
  bool any = false;
  // A ranges over subsets of s_mask
  Mask a = s_mask;
  while (true) {
    const double fa = f(a);
    const Mask comp = f.full_mask() & ~a;
    Mask b = comp;
    while (true) {
      if (cardinality(b) <= K) {
        any = true;
        const double lhs = f(a | b) - fa;
        if (lhs > 0.0) {
          double rhs = 0.0;
          for (int s = 0; s < n; ++s) {
            if (b & (Mask{1} << s)) rhs += f(a | (Mask{1} << s)) - fa;
          }
          best = std::min(best, rhs / lhs);
        }
      }
      if (b == 0) break;
      b = (b - 1) & comp;
    }
    if (a == 0) break;
    a = (a - 1) & s_mask;
  }
  if (!any) return -kInf;
  return best;
}

double local_submod_index(const SetFunction& f, Mask a, Mask b) {
  const double fa = f(a);
  double v = f(a | b) - fa;
  for (int s = 0; s < f.n(); ++s) {
    if (b & (Mask{1} << s)) v -= f(a | (Mask{1} << s)) - fa;
  }
  return v;
}

namespace {

double index_over_as(const SetFunction& f, const SubsetCollection& as, int K) {
  if (K < 2) return 0.0;  // empty family convention
  bool any = false;
  double best = 0.0;
  for (Mask a : as) {
    const Mask comp = f.full_mask() & ~a;
    Mask b = comp;
    while (true) {
      const int kb = cardinality(b);
      if (kb >= 2 && kb <= K) {
        const double phi = local_submod_index(f, a, b);
        if (!any || phi > best) {
          any = true;
          best = phi;
        }
      }
      if (b == 0) break;
      b = (b - 1) & comp;
    }
  }
  return any ? best : 0.0;
}

}  // namespace

double submodularity_index(const SetFunction& f, Mask s_mask, int K) {
  SubsetCollection as;
  Mask a = s_mask;
  while (true) {
    as.push_back(a);
    if (a == 0) break;
    a = (a - 1) & s_mask;
  }
  return index_over_as(f, as, K);
}

double submodularity_indicator(const SetFunction& f, const SubsetCollection& c,
                               int K) {
  return index_over_as(f, c, K);
}

namespace {

bool in_region(Mask s, std::optional<Mask> region) {
  if (!region) return true;
  return cardinality(s & ~*region) <= 1;
}

}  // namespace

bool verify_eps_sandwich(const SetFunction& f, const SetFunction& g, double eps,
                         std::optional<Mask> region) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::GroundMismatch, "sandwich needs one ground set");
  }
  if (eps < 0.0) throw Error(ErrorCode::InvalidParams, "eps must be >= 0");
  if (!certify_flags(g).submodular) {
    throw Error(ErrorCode::NotSubmodular, "sandwich baseline not submodular");
  }
  const double tol = 1e-9;
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    if (!in_region(s, region)) continue;
    if ((1.0 - eps) * g(s) > f(s) + tol) return false;
    if (f(s) > (1.0 + eps) * g(s) + tol) return false;
  }
  return true;
}

double min_eps_for_pair(const SetFunction& f, const SetFunction& g,
                        std::optional<Mask> region) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::GroundMismatch, "sandwich needs one ground set");
  }
  const FunctionFlags gflags = certify_flags(g);
  if (!gflags.submodular) {
    throw Error(ErrorCode::NotSubmodular, "sandwich baseline not submodular");
  }
  if (!gflags.nonneg) {
    throw Error(ErrorCode::NotNonnegative, "sandwich baseline must be >= 0");
  }
  double eps = 0.0;
  for (Mask s = 0; s <= f.full_mask(); ++s) {
    if (!in_region(s, region)) continue;
    const double gs = g(s), fs = f(s);
    if (gs == 0.0) {
      if (fs != 0.0) return kInf;
      continue;
    }
    eps = std::max(eps, std::abs(fs - gs) / gs);
  }
  return eps;
}

}  // namespace approxsub
