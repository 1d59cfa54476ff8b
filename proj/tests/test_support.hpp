// Copyright 2026 The eqlines Authors
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

#ifndef EQLINES_TESTS_TEST_SUPPORT_HPP_
#define EQLINES_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "eqlines/exact.hpp"

namespace eql::testing {

// EQL_SEED overrides the default seed of the randomized suites.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("EQL_SEED"); s != nullptr && *s != '\0') {
    return std::stoull(s);
  }
  return 20260101;
}

// Simple roots e_i - e_{i+1} of the first A9 block.
inline std::vector<ScaledVector> a9_basis() {
  std::vector<ScaledVector> basis;
  for (int i = 0; i < 9; ++i) {
    ScaledVector v;
    v[i] = kScale;
    v[i + 1] = -kScale;
    basis.push_back(v);
  }
  return basis;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

// Product of random elementary row operations and swaps.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::Identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = row(rng);
    std::size_t b = row(rng);
    if (a == b) b = (a + 1) % n;
    if (s % 5 == 4) {
      u.swap_rows(a, b);
      continue;
    }
    const long f = factor(rng);
    for (std::size_t c = 0; c < n; ++c) u(a, c) += f * u(b, c);
  }
  return u;
}

}  // namespace eql::testing

#endif  // EQLINES_TESTS_TEST_SUPPORT_HPP_
