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

#include "approxsub/set_function.hpp"

#include <cmath>
#include <limits>

namespace approxsub {

GroundSet::GroundSet(int n_in) : n(n_in) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::TooLarge,
                "ground set size must be in [1, 20], got " + std::to_string(n));
  }
}

SetFunction::SetFunction(int n, std::vector<double> values)
    : ground_(n), values_(std::move(values)) {
  if (values_.size() != ground_.table_size()) {
    throw Error(ErrorCode::InvalidTable,
                "table length " + std::to_string(values_.size()) +
                    " != 2^" + std::to_string(n));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidTable, "non-finite table entry");
    }
  }
}

double SetFunction::at(Mask s) const {
  if (s >= values_.size()) {
    throw Error(ErrorCode::InvalidSubset, "subset mask out of range");
  }
  return values_[s];
}

FunctionFlags certify_flags(const SetFunction& f) {
  const int n = f.n();
  const Mask full = f.full_mask();
  FunctionFlags flags;
  flags.nonneg = true;
  flags.increasing = true;
  flags.normalized = f(0) == 0.0;
  flags.submodular = true;
  for (Mask s = 0; s <= full; ++s) {
    if (f(s) < 0.0) flags.nonneg = false;
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) continue;
      if (f(s | (Mask{1} << i)) < f(s)) flags.increasing = false;
    }
  }
  // Local exchange characterization: equivalent to the union-intersection
  // inequality over all pairs, but O(2^n n^2) instead of O(4^n).
  for (Mask s = 0; s <= full && flags.submodular; ++s) {
    for (int i = 0; i < n && flags.submodular; ++i) {
      if (s & (Mask{1} << i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (s & (Mask{1} << j)) continue;
        const Mask bi = Mask{1} << i, bj = Mask{1} << j;
        if (f(s | bi | bj) + f(s) > f(s | bi) + f(s | bj)) {
          flags.submodular = false;
          break;
        }
      }
    }
  }
  return flags;
}

bool is_modular(const SetFunction& g, double tol) {
  const int n = g.n();
  const Mask full = g.full_mask();
  // Modular <=> g(S) = g(empty) + sum of singleton increments.
  for (Mask s = 0; s <= full; ++s) {
    double expect = g(0);
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) expect += g(Mask{1} << i) - g(0);
    }
    if (std::abs(g(s) - expect) > tol) return false;
  }
  return true;
}

SetFunction complement_transform(const SetFunction& f) {
  const Mask full = f.full_mask();
  std::vector<double> out(f.table_size());
  for (Mask s = 0; s <= full; ++s) out[s] = f(full & ~s);
  return SetFunction(f.n(), std::move(out));
}

SetFunction symmetrize_transform(const SetFunction& f) {
  const Mask full = f.full_mask();
  std::vector<double> out(f.table_size());
  for (Mask s = 0; s <= full; ++s) out[s] = f(s) + f(full & ~s) - f(full);
  return SetFunction(f.n(), std::move(out));
}

std::pair<SetFunction, std::vector<int>> restrict_transform(
    const SetFunction& f, Mask a) {
  if (a > f.full_mask()) {
    throw Error(ErrorCode::InvalidSubset, "restriction set out of range");
  }
  std::vector<int> mapping;  // new index (0-based) -> original element label
  for (int i = 0; i < f.n(); ++i) {
    if (!(a & (Mask{1} << i))) mapping.push_back(i + 1);
  }
  const int m = static_cast<int>(mapping.size());
  if (m == 0) {
    throw Error(ErrorCode::InvalidSubset,
                "restriction to the full set leaves an empty ground set");
  }
  std::vector<double> out(std::size_t{1} << m);
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    Mask orig = a;
    for (int i = 0; i < m; ++i) {
      if (s & (Mask{1} << i)) orig |= Mask{1} << (mapping[i] - 1);
    }
    out[s] = f(orig);
  }
  return {SetFunction(m, std::move(out)), std::move(mapping)};
}

std::pair<SetFunction, std::vector<std::vector<int>>> group_transform(
    const SetFunction& f, int q) {
  const int n = f.n();
  if (q <= 0 || n % q != 0) {
    throw Error(ErrorCode::InvalidGrouping,
                "group size must divide the ground-set size");
  }
  const int m = n / q;
  std::vector<std::vector<int>> groups(m);
  std::vector<Mask> group_masks(m, 0);
  for (int g = 0; g < m; ++g) {
    for (int j = 0; j < q; ++j) {
      const int elem = g * q + j + 1;
      groups[g].push_back(elem);
      group_masks[g] |= Mask{1} << (elem - 1);
    }
  }
  std::vector<double> out(std::size_t{1} << m);
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    Mask orig = 0;
    for (int g = 0; g < m; ++g) {
      if (s & (Mask{1} << g)) orig |= group_masks[g];
    }
    out[s] = f(orig);
  }
  return {SetFunction(m, std::move(out)), std::move(groups)};
}

SetFunction convolve(const SetFunction& f, const SetFunction& g) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::GroundMismatch, "convolution needs one ground set");
  }
  if (!is_modular(g)) {
    throw Error(ErrorCode::NotModular, "convolution partner must be modular");
  }
  const Mask full = f.full_mask();
  std::vector<double> out(f.table_size());
  for (Mask s = 0; s <= full; ++s) {
    double best = std::numeric_limits<double>::infinity();
    // enumerate Z over all subsets of s
    Mask z = s;
    while (true) {
      best = std::min(best, f(z) + g(s & ~z));
      if (z == 0) break;
      z = (z - 1) & s;
    }
    out[s] = best;
  }
  return SetFunction(f.n(), std::move(out));
}

SetFunction scale(const SetFunction& f, double alpha) {
  if (alpha < 0.0) {
    throw Error(ErrorCode::InvalidParams, "scale factor must be nonnegative");
  }
  std::vector<double> out(f.values());
  for (double& v : out) v *= alpha;
  return SetFunction(f.n(), std::move(out));
}

SetFunction sum(const SetFunction& f, const SetFunction& g) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::GroundMismatch, "sum needs one ground set");
  }
  std::vector<double> out(f.values());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.values()[i];
  return SetFunction(f.n(), std::move(out));
}

}  // namespace approxsub
