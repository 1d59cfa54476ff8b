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

#ifndef EQLINES_SEIDEL_HPP_
#define EQLINES_SEIDEL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqlines/exact.hpp"
#include "eqlines/x_vectors.hpp"
#include "json.hpp"

namespace eql::seidel {

// Scaled vectors 2u - r; each has norm 10 and pairwise products are +-2.
struct LineSystem {
  std::vector<ScaledVector> vectors;
};

LineSystem lines_from_aes(const xset::AesSet& s);

// Rank of the Gram matrix of the line system.
std::size_t line_gram_rank(const LineSystem& lines);

// S = 5 I - W with W the Gram matrix of the lines (diagonal 5, entries +-1),
// rows in AesSet order.
IntMatrix seidel_matrix(const xset::AesSet& s);

struct Analysis {
  IntPolynomial charpoly;
  std::size_t mult5 = 0;
  std::size_t dimension = 0;
  std::size_t distinct_eigs = 0;
};

Analysis analyze(const xset::AesSet& s);

// Integer roots with multiplicities (descending) and the cofactor without
// integer roots in [-bound, bound].
struct Factored {
  std::vector<std::pair<Int, std::size_t>> roots;
  IntPolynomial residual;
  // e.g. "(x-5)^39(x+9)^2(x^2+17x+36)".
  std::string to_string() const;
};

Factored factor_integer_roots(IntPolynomial p, long bound);

// char_poly is unchanged by `trials` random switchings of s.
bool switching_invariance_check(const xset::AesSet& s, int trials, std::uint64_t seed);

// The two expanded polynomials printed for the round-robin examples:
// which = 1 for (x-5)^39 (x+9)^2 (x+11)^11 (x+13)^3 (x^2+17x+36),
// which = 2 for (x-5)^39 (x+9) (x+11)^13 (x+13)^2 (x^2+17x+32).
IntPolynomial printed_example_polynomial(int which);

nlohmann::json to_json(const Analysis& a);

}  // namespace eql::seidel

#endif  // EQLINES_SEIDEL_HPP_
