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

#ifndef APPROXSUB_TESTS_TEST_UTIL_HPP
#define APPROXSUB_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "approxsub/set_function.hpp"

namespace approxsub::testutil {

// Random increasing, nonnegative, normalized function: start from random
// nonnegative seeds and push maxima up the subset lattice. Integer-valued
// so that sums and comparisons stay exact in doubles.
inline SetFunction random_increasing(int n, std::mt19937_64& rng,
                                     int max_seed = 20) {
  std::uniform_int_distribution<int> seed(0, max_seed);
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> values(size);
  values[0] = 0.0;
  for (Mask s = 1; s < size; ++s) {
    double v = seed(rng);
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) v = std::max(v, values[s & ~(Mask{1} << i)]);
    }
    values[s] = v;
  }
  return SetFunction(n, std::move(values));
}

inline SetFunction modular_from_weights(const std::vector<double>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    for (int i = 0; i < n; ++i) {
      if (s & (Mask{1} << i)) values[s] += w[i];
    }
  }
  return SetFunction(n, std::move(values));
}

// 1 iff {2,3} is selected; the smallest non-submodular increasing function.
inline SetFunction pair_bonus() {
  return SetFunction(3, {0, 0, 0, 0, 0, 0, 1, 1});
}

// min(|S|, 2): increasing and submodular.
inline SetFunction capped_cardinality(int n = 3) {
  std::vector<double> values(std::size_t{1} << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    values[s] = std::min(cardinality(s), 2);
  }
  return SetFunction(n, std::move(values));
}

// The two six-element fixtures whose submodularity ratios vanish separately
// but not after summation.
inline SetFunction ratio_fixture_f() {
  std::vector<double> values(64);
  for (Mask s = 0; s < 64; ++s) {
    const bool hit = ((s & 0b110) == 0b110) || (s & 0b111000);
    const int c = cardinality(s);
    values[s] = hit ? c * c : 0.0;
  }
  return SetFunction(6, std::move(values));
}

inline SetFunction ratio_fixture_g() {
  std::vector<double> values(64);
  for (Mask s = 0; s < 64; ++s) {
    const bool hit = (s == 0b111000) || (s & 0b000111);
    const int c = cardinality(s);
    values[s] = hit ? c * c : 0.0;
  }
  return SetFunction(6, std::move(values));
}

}  // namespace approxsub::testutil

#endif  // APPROXSUB_TESTS_TEST_UTIL_HPP
