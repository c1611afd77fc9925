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

#ifndef APPROXSUB_SET_FUNCTION_HPP
#define APPROXSUB_SET_FUNCTION_HPP

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "approxsub/errors.hpp"

namespace approxsub {

// Subsets of the ground set {1..n} are encoded as bitmasks: bit (i-1) set
// iff element i is in the subset. The table index of a subset is its mask.
using Mask = std::uint32_t;

inline int cardinality(Mask m) { return std::popcount(m); }

// Hard cap on the ground-set size; tables have 2^n entries.
inline constexpr int kMaxGroundSize = 20;

// Metric enumerations get expensive past this point; callers may warn.
inline constexpr int kCostWarnGroundSize = 14;

struct GroundSet {
  int n;
  explicit GroundSet(int n_in);
  Mask full() const { return (Mask{1} << n) - 1; }
  std::size_t table_size() const { return std::size_t{1} << n; }
};

// Dense tabulated set function over {1..n}; immutable after construction.
class SetFunction {
 public:
  SetFunction(int n, std::vector<double> values);

  int n() const { return ground_.n; }
  const GroundSet& ground() const { return ground_; }
  Mask full_mask() const { return ground_.full(); }
  std::size_t table_size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

  double operator()(Mask s) const { return values_[s]; }
  double at(Mask s) const;  // bounds-checked eval

 private:
  GroundSet ground_;
  std::vector<double> values_;
};

struct FunctionFlags {
  bool nonneg = false;
  bool increasing = false;
  bool normalized = false;
  bool submodular = false;
};

// Exhaustive certification of the standard structural flags.
FunctionFlags certify_flags(const SetFunction& f);

bool is_modular(const SetFunction& g, double tol = 0.0);

// f1(S) = f(S^c)
SetFunction complement_transform(const SetFunction& f);

// f2(S) = f(S) + f(S^c) - f(full)
SetFunction symmetrize_transform(const SetFunction& f);

// f_A on ground set {1..n}\A, relabeled 1..m in ascending original order.
// Returns the function together with the relabeling (new index i -> original
// element mapping[i]).
std::pair<SetFunction, std::vector<int>> restrict_transform(
    const SetFunction& f, Mask a);

// f_q on ground {1..n/q}; group i covers original elements
// {(i-1)q+1, ..., iq}. Requires q | n.
std::pair<SetFunction, std::vector<std::vector<int>>> group_transform(
    const SetFunction& f, int q);

// (f * g)(S) = min_{Z subset of S} f(Z) + g(S\Z); g must be modular.
SetFunction convolve(const SetFunction& f, const SetFunction& g);

SetFunction scale(const SetFunction& f, double alpha);
SetFunction sum(const SetFunction& f, const SetFunction& g);

}  // namespace approxsub

#endif  // APPROXSUB_SET_FUNCTION_HPP
