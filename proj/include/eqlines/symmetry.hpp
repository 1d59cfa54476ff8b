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

// The stabilizer of r in Aut(Lambda), in the normal form
//   (sigma1, sigma2, id)         when negated is false,
//   -(sigma1, sigma2, -id)       when negated is true,
// and its action on labels, sets and switching classes.

#ifndef EQLINES_SYMMETRY_HPP_
#define EQLINES_SYMMETRY_HPP_

#include <cstdint>
#include <vector>

#include "eqlines/colorings.hpp"
#include "eqlines/exact.hpp"
#include "eqlines/permutation.hpp"
#include "eqlines/x_vectors.hpp"

namespace eql::sym {

struct AutElement {
  Permutation sigma1 = Permutation(10);
  Permutation sigma2 = Permutation(10);
  bool negated = false;

  static AutElement Identity() { return {}; }
  // (-id, -id, id).
  static AutElement Mu() { return {Permutation(10), Permutation(10), true}; }

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

// g o h.
AutElement compose(const AutElement& g, const AutElement& h);
AutElement inverse(const AutElement& g);
AutElement random_element(std::uint64_t seed);

xset::XLabel apply(const AutElement& g, const xset::XLabel& x);
// Coordinate action on the ambient space.
ScaledVector apply(const AutElement& g, const ScaledVector& v);

xset::AesSet act_on_aes(const AutElement& g, const xset::AesSet& s);

bool stabilizes(const AutElement& g, const xset::AesSet& s, bool up_to_switching);

// A subgroup of S_10 found by exhaustive search.
class PermutationGroup {
 public:
  explicit PermutationGroup(std::vector<Permutation> elements);
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  const std::vector<Permutation>& elements() const { return elements_; }

 private:
  std::vector<Permutation> elements_;  // sorted
};

// Permutations of [10] mapping the factor set of f onto itself.
PermutationGroup aut_of_factorization(const colorings::OneFactorization& f);

// Permutations of [10] mapping the 12 sets of psi0 onto themselves.
PermutationGroup aut_of_i0();

}  // namespace eql::sym

#endif  // EQLINES_SYMMETRY_HPP_
