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

// Matchings, 1-factorizations and proper edge colourings of K_{2n}.

#ifndef EQLINES_COLORINGS_HPP_
#define EQLINES_COLORINGS_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "eqlines/exact.hpp"
#include "eqlines/permutation.hpp"
#include "eqlines/x_vectors.hpp"
#include "json.hpp"

namespace eql::colorings {

// Unordered pair {first, second} with first < second.
using Edge = std::pair<int, int>;
Edge make_edge(int a, int b);

// Sorted, vertex-disjoint edges.
class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument if two edges share a vertex.
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

Matching difference(const Matching& a, const Matching& b);
Matching relabel(const Permutation& sigma, const Matching& m);

struct OneFactorization {
  int vertices = 0;
  std::vector<Matching> factors;
  friend bool operator==(const OneFactorization&, const OneFactorization&) = default;
};

struct ProperColoring {
  int vertices = 0;
  std::vector<Matching> classes;
  friend bool operator==(const ProperColoring&, const ProperColoring&) = default;
  friend auto operator<=>(const ProperColoring&, const ProperColoring&) = default;
};

bool is_one_factorization(const OneFactorization& f);
// Pairwise disjoint matchings, one per vertex, covering every edge once.
bool is_proper_coloring(const ProperColoring& y);

// T(n) = T(n-1) + (n-1) T(n-2).
Int telephone(int n);

// Matchings of K_v, including the empty one, by explicit enumeration.
// Requires 0 <= v <= 12.
Int count_matchings(int v);
std::vector<Matching> all_matchings(int v);
std::vector<Matching> perfect_matchings(int v);

// Circle-method factorization {H_1, ..., H_{2n-1}} of K_{2n}.
OneFactorization round_robin(int n);

// Colouring of K_10 whose i-th class is H_{seq[i]} of round_robin(5), with 0
// standing for the empty class.  Throws unless the result is proper.
ProperColoring coloring_from_h_sequence(const std::vector<int>& seq);

// (F_1 \ M, ..., F_{2n-1} \ M, M).
ProperColoring inject_f(const OneFactorization& f, const Matching& m);

struct InjectivityReport {
  std::size_t inputs = 0;
  std::size_t distinct_outputs = 0;
  bool all_valid = true;
};

// Runs inject_f over every ordered 1-factorization of K_{2n} and every
// matching of K_{2n}.  Requires n <= 3.
InjectivityReport check_injection(int n);

// Every 1-factorization of K_v as a set of factors sorted canonically.
// Requires v <= 8.
std::vector<OneFactorization> enumerate_factorizations(int v);

// Number of unordered 1-factorizations of K_v (v even, v <= 10).  The
// callback, if set, receives (finished first-level branches, total branches).
Int count_factorizations(int v, unsigned jobs = 1,
                         const std::function<void(std::size_t, std::size_t)>& progress = {});

// {V1(i, j, k) : {j, k} in Y_i} for a colouring of K_10.
xset::AesSet coloring_to_aes(const ProperColoring& y);
// Inverse of coloring_to_aes; rejects labels outside X_1 and non-AES input.
ProperColoring aes_to_coloring(const xset::AesSet& s);

// A colouring of K_10 in the image of inject_f, drawn from a random
// relabelling of round_robin(5), a random factor order and a random matching.
ProperColoring random_coloring(std::uint64_t seed);

struct CountChain {
  Int factorial9;
  Int telephone10;
  Int factorizations5;  // the value 6240 used in the counting argument
  Int colorings_lower;  // 9! T(10) F(5)
  Int clique_count;
  Int aes_lower;  // clique_count * colorings_lower
  Int group_order_squared;  // (10!)^2
  Int isometry_lower;  // floor(aes_lower / (10!)^2)
};

CountChain count_chain();

// The value list printed for F(n), n = 0, 1, 2, ...
std::vector<Int> printed_factorization_list();

nlohmann::json to_json(const ProperColoring& y);
ProperColoring coloring_from_json(const nlohmann::json& j);

}  // namespace eql::colorings

#endif  // EQLINES_COLORINGS_HPP_
