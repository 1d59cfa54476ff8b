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

// The root lattices A_n, their glue vectors, and the overlattice
//
//   Lambda = (A9 + A9 + A1) + Z alpha,   alpha = (alpha_9, 2 alpha_9, alpha_1),
//
// together with its dual Lambda* = Lambda + Z beta, beta = (2 alpha_9,
// -alpha_9, 0), and the switching root r = (0, 0, 2 alpha_1).

#ifndef EQLINES_ROOT_LATTICES_HPP_
#define EQLINES_ROOT_LATTICES_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eqlines/exact.hpp"

namespace eql::roots {

// A vector of the (n+1)-dimensional ambient space of A_n, stored as
// `scale` times its coordinates.
struct BlockVector {
  std::vector<std::int64_t> coords;
  std::int64_t scale = 1;

  Rational norm() const;
  // Same vector expressed at another scale; throws if not integral there.
  BlockVector rescaled(std::int64_t new_scale) const;

  friend bool operator==(const BlockVector&, const BlockVector&) = default;
  friend auto operator<=>(const BlockVector&, const BlockVector&) = default;
};

// The coset m alpha_n + A_n of A_n* / A_n.
struct CosetLabel {
  int n = 0;
  int m = 0;
};

// m alpha + L inside Lambda.
struct LambdaCoset {
  int m = 0;
  friend bool operator==(const LambdaCoset&, const LambdaCoset&) = default;
};

// i alpha + j beta + L inside Lambda*.
struct DualCoset {
  int i = 0;
  int j = 0;
  friend bool operator==(const DualCoset&, const DualCoset&) = default;
};

// alpha_n at scale 10; requires n+1 to divide 10.
BlockVector glue_vector(int n);

// The C(n+1, m) vectors of minimal norm in m alpha_n + A_n, 1 <= m <= n+1,
// at scale n+1 (sorted).
std::vector<BlockVector> min_coset_reps(CosetLabel c);

// m(n+1-m)/(n+1), with m taken mod n+1.
Rational coset_min_norm(CosetLabel c);

// All vectors of m alpha_n + A_n with norm <= bound, at scale n+1, sorted.
std::vector<BlockVector> enum_coset_vectors(CosetLabel c, const Rational& bound);

// Fixed vectors of the ambient space.
ScaledVector alpha();
ScaledVector beta();
ScaledVector root_r();

// Embeds three block vectors into a ScaledVector (rescaling each to 10).
ScaledVector compose(const BlockVector& first, const BlockVector& second,
                     const BlockVector& a1);

bool in_L(const ScaledVector& v);

// m such that v - m alpha lies in L, or nothing when v is not in Lambda.
std::optional<LambdaCoset> lambda_membership(const ScaledVector& v);

// (i, j) such that v - i alpha - j beta lies in L, or nothing when v is not
// in Lambda*.
std::optional<DualCoset> dual_membership(const ScaledVector& v);

// Cosets of A9 (for the two A9 blocks) and of A1 that make up i alpha + j beta.
struct BlockCosets {
  int first = 0;
  int second = 0;
  int a1 = 0;
};
BlockCosets block_cosets(DualCoset d);

// The pairs (first, second) of A9-coset labels for the dual cosets outside
// Lambda that can contain a vector with (v, r) = 1.
std::vector<std::pair<int, int>> dual_glue_pairs_with_r();

// All v in Lambda* with (v, v) <= bound and (v, r) = 1, sorted.
std::vector<ScaledVector> enum_dual_short_with_r(const Rational& bound);

// Minimum norm of a vector v in Lambda* \ Lambda with (v, r) = 1.
Rational dual_min_outside_lambda_with_r();

struct LatticeBases {
  std::vector<ScaledVector> L_basis;
  std::vector<ScaledVector> lambda_basis;
  std::vector<ScaledVector> dual_basis;
};

// 19-element bases of L, Lambda and Lambda*.
const LatticeBases& lambda_bases();

}  // namespace eql::roots

#endif  // EQLINES_ROOT_LATTICES_HPP_
