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

// Switching classes of V5 vectors as a 126-vertex graph and its maximum
// cliques.

#ifndef EQLINES_X5_CLIQUES_HPP_
#define EQLINES_X5_CLIQUES_HPP_

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eqlines/exact.hpp"
#include "eqlines/permutation.hpp"
#include "eqlines/x_vectors.hpp"

namespace eql::cliques {

inline constexpr std::size_t kClassCount = 126;
inline constexpr std::size_t kMaxClique = 12;

using xset::SubsetMask;
using VertexSet = std::bitset<kClassCount>;

// Vertex representative of the class {V5(I), V5(I^c)}: the set containing 1.
SubsetMask class_rep(SubsetMask set);

// |I n J| in {2, 3}.
bool class_adjacent(SubsetMask a, SubsetMask b);

class ClassGraph {
 public:
  ClassGraph();

  std::size_t size() const { return vertices_.size(); }
  // Vertices are sorted by their element lists.
  SubsetMask vertex(std::size_t v) const { return vertices_[v]; }
  std::size_t index_of(SubsetMask rep) const;
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t edge_count() const;

 private:
  std::vector<SubsetMask> vertices_;
  std::vector<VertexSet> adj_;
  std::array<std::int16_t, 1024> index_{};
};

const ClassGraph& class_graph();

// Sorted vertex indices of a 12-clique.
using Clique = std::array<std::uint8_t, kMaxClique>;

struct CliqueCensus {
  std::vector<Clique> cliques;  // sorted
  std::size_t maximum_size = 0;
  bool larger_clique_found = false;
  std::uint64_t search_nodes = 0;
};

// All 12-cliques; the search also looks one level deeper to certify that no
// 13-clique exists.  `jobs` worker threads split the first branching level;
// the result does not depend on it.  `reverse_order` explores vertices in the
// opposite order (used to check stability).
CliqueCensus enum_max_cliques(unsigned jobs = 1, bool reverse_order = false);

// The 12 sets I_{i,j} in the order (1,2), (1,3), (1,4), (2,1), ..., (4,3).
std::vector<SubsetMask> psi0_sets();
// The list printed after the definition, in the same order.
std::vector<SubsetMask> psi0_printed_sets();
xset::AesSet psi0();
Clique clique_of(const xset::AesSet& s);
xset::AesSet clique_to_aes(const Clique& c);

// Extension of sigma in S_4 to [10]: fixes the 4-cycle conjugation action on
// the labels 5..10 of c_1..c_6.
Permutation s4_extension(const Permutation& sigma);

struct OrbitResult {
  std::size_t orbit_size = 0;
  Int stabilizer_order;
  std::vector<Clique> orbit;  // sorted
};

// Orbit of a clique under S_10, by breadth-first search from the generators
// (1,2) and (1,...,10).
OrbitResult s10_orbit(const Clique& c);

Clique act_on_clique(const Permutation& sigma, const Clique& c);

struct RootComponent {
  char family = '?';  // 'A', 'D', 'E' or '?' when unrecognized
  int rank = 0;
  std::size_t roots = 0;
  friend auto operator<=>(const RootComponent&, const RootComponent&) = default;
};

struct RootSystemType {
  std::vector<RootComponent> components;  // sorted
  std::size_t total_roots = 0;
  bool recognized = true;
  std::string to_string() const;  // e.g. "A1+A3+A5"
};

// Norm-2 vectors of the lattice spanned by `gens`, grouped by connectivity
// under non-orthogonality.
RootSystemType root_sublattice_type(std::span<const ScaledVector> gens);

}  // namespace eql::cliques

#endif  // EQLINES_X5_CLIQUES_HPP_
