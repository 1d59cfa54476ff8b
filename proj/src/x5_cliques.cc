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

#include "eqlines/x5_cliques.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace eql::cliques {

SubsetMask class_rep(SubsetMask set) {
  if (std::popcount(set) != 5 || (set & ~xset::kFullMask) != 0) {
    throw std::invalid_argument("class_rep needs a 5-subset of [10]");
  }
  return (set & 1U) ? set : static_cast<SubsetMask>(xset::kFullMask & ~set);
}

bool class_adjacent(SubsetMask a, SubsetMask b) {
  const int n = std::popcount(static_cast<unsigned>(a & b));
  return n == 2 || n == 3;
}

ClassGraph::ClassGraph() {
  index_.fill(-1);
  for (const auto& x : xset::enumerate_x()) {
    if (x.kind() == xset::XKind::kV5 && (x.set() & 1U)) vertices_.push_back(x.set());
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    index_[vertices_[v]] = static_cast<std::int16_t>(v);
  }
  adj_.resize(vertices_.size());
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    for (std::size_t b = 0; b < vertices_.size(); ++b) {
      if (a != b && class_adjacent(vertices_[a], vertices_[b])) adj_[a].set(b);
    }
  }
}

std::size_t ClassGraph::index_of(SubsetMask rep) const {
  if (rep > xset::kFullMask || index_[rep] < 0) {
    throw std::invalid_argument("not a class representative");
  }
  return static_cast<std::size_t>(index_[rep]);
}

std::size_t ClassGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

const ClassGraph& class_graph() {
  static const ClassGraph graph;
  return graph;
}

namespace {

struct Bits {
  std::uint64_t w[2] = {0, 0};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool any() const { return (w[0] | w[1]) != 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  int first() const {
    return w[0] ? std::countr_zero(w[0]) : 64 + std::countr_zero(w[1]);
  }
  Bits operator&(const Bits& o) const {
    Bits b;
    b.w[0] = w[0] & o.w[0];
    b.w[1] = w[1] & o.w[1];
    return b;
  }
  Bits without(const Bits& o) const {
    Bits b;
    b.w[0] = w[0] & ~o.w[0];
    b.w[1] = w[1] & ~o.w[1];
    return b;
  }
};

class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Bits>& adj) : adj_(adj) {}

  // Explores the branch whose smallest vertex is `v`.
  void run_root(int v) {
    Bits later;
    for (std::size_t u = v + 1; u < adj_.size(); ++u) later.set(u);
    stack_[0] = static_cast<std::uint8_t>(v);
    recurse(1, adj_[v] & later);
  }

  std::vector<Clique> found;
  std::uint64_t nodes = 0;
  bool larger = false;

 private:
  // Greedy sequential colouring: an upper bound on the clique number of P.
  int colour_bound(Bits p, int needed) const {
    int colours = 0;
    while (p.any()) {
      ++colours;
      if (colours >= needed) return colours;
      Bits q = p;
      while (q.any()) {
        const int v = q.first();
        q.reset(v);
        p.reset(v);
        q = q.without(adj_[v]);
      }
    }
    return colours;
  }

  void recurse(int depth, Bits p) {
    ++nodes;
    if (depth == static_cast<int>(kMaxClique)) {
      if (p.any()) larger = true;
      Clique c;
      std::copy(stack_.begin(), stack_.begin() + kMaxClique, c.begin());
      found.push_back(c);
      return;
    }
    const int needed = static_cast<int>(kMaxClique) - depth;
    if (p.count() < needed) return;
    if (colour_bound(p, needed) < needed) return;
    while (p.any()) {
      if (p.count() < needed) return;
      const int v = p.first();
      p.reset(v);
      stack_[depth] = static_cast<std::uint8_t>(v);
      recurse(depth + 1, p & adj_[v]);
    }
  }

  const std::vector<Bits>& adj_;
  std::array<std::uint8_t, kMaxClique + 1> stack_{};
};

}  // namespace

CliqueCensus enum_max_cliques(unsigned jobs, bool reverse_order) {
  const ClassGraph& g = class_graph();
  const std::size_t n = g.size();
  // relabel[new] = old vertex index.
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  if (reverse_order) std::reverse(relabel.begin(), relabel.end());
  std::vector<Bits> adj(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.adjacent(relabel[a], relabel[b])) adj[a].set(b);
    }
  }

  CliqueCensus census;
  std::mutex merge;
  std::atomic<int> next{0};
  auto worker = [&] {
    CliqueSearch search(adj);
    for (int v = next++; v < static_cast<int>(n); v = next++) search.run_root(v);
    std::lock_guard<std::mutex> lock(merge);
    census.cliques.insert(census.cliques.end(), search.found.begin(), search.found.end());
    census.search_nodes += search.nodes;
    census.larger_clique_found = census.larger_clique_found || search.larger;
  };
  jobs = std::max(1U, jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  for (auto& c : census.cliques) {
    for (auto& v : c) v = static_cast<std::uint8_t>(relabel[v]);
    std::sort(c.begin(), c.end());
  }
  std::sort(census.cliques.begin(), census.cliques.end());
  census.maximum_size = census.cliques.empty() ? 0 : kMaxClique;
  if (census.larger_clique_found) census.maximum_size = kMaxClique + 1;
  return census;
}

namespace {

const std::array<const char*, 6> kCycles = {"(1,2,3,4)", "(1,3,2,4)", "(1,2,4,3)",
                                            "(1,3,4,2)", "(1,4,2,3)", "(1,4,3,2)"};

const std::vector<Permutation>& four_cycles() {
  static const std::vector<Permutation> cycles = [] {
    std::vector<Permutation> out;
    for (const char* c : kCycles) out.push_back(Permutation::FromCycles(4, c));
    return out;
  }();
  return cycles;
}

}  // namespace

std::vector<SubsetMask> psi0_sets() {
  const auto& c = four_cycles();
  std::vector<SubsetMask> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      SubsetMask m = 0;
      for (int x = 1; x <= 4; ++x) {
        if (x != i) m |= static_cast<SubsetMask>(1U << (x - 1));
      }
      for (int k = 5; k <= 10; ++k) {
        if (c[k - 5](i) == j) m |= static_cast<SubsetMask>(1U << (k - 1));
      }
      out.push_back(m);
    }
  }
  return out;
}

std::vector<SubsetMask> psi0_printed_sets() {
  const std::vector<std::vector<int>> printed = {
      {2, 3, 4, 5, 7}, {2, 3, 4, 6, 8}, {2, 3, 4, 9, 10}, {1, 3, 4, 8, 10},
      {1, 3, 4, 5, 9}, {1, 3, 4, 6, 7}, {1, 2, 4, 7, 9},  {1, 2, 4, 6, 10},
      {1, 2, 4, 5, 8}, {1, 2, 3, 5, 6}, {1, 2, 3, 8, 9},  {1, 2, 3, 7, 10}};
  std::vector<SubsetMask> out;
  for (const auto& s : printed) out.push_back(xset::mask_of(s));
  return out;
}

xset::AesSet psi0() {
  const auto sets = psi0_sets();
  if (sets != psi0_printed_sets()) {
    throw std::logic_error("psi0: formula disagrees with the printed list");
  }
  std::vector<xset::XLabel> labels;
  for (SubsetMask m : sets) labels.push_back(xset::XLabel::V5(m));
  return xset::AesSet(std::move(labels));
}

Clique clique_of(const xset::AesSet& s) {
  if (s.size() != kMaxClique) throw std::invalid_argument("clique_of: need 12 labels");
  const ClassGraph& g = class_graph();
  Clique c;
  for (std::size_t n = 0; n < kMaxClique; ++n) {
    const auto& x = s.labels()[n];
    if (x.kind() != xset::XKind::kV5) throw std::invalid_argument("clique_of: need V5 labels");
    c[n] = static_cast<std::uint8_t>(g.index_of(class_rep(x.set())));
  }
  std::sort(c.begin(), c.end());
  if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
    throw std::invalid_argument("clique_of: repeated switching class");
  }
  return c;
}

xset::AesSet clique_to_aes(const Clique& c) {
  const ClassGraph& g = class_graph();
  std::vector<xset::XLabel> labels;
  for (auto v : c) labels.push_back(xset::XLabel::V5(g.vertex(v)));
  return xset::AesSet(std::move(labels));
}

Permutation s4_extension(const Permutation& sigma) {
  if (sigma.degree() != 4) throw std::invalid_argument("s4_extension: need degree 4");
  const auto& c = four_cycles();
  std::vector<int> images(10);
  for (int x = 1; x <= 4; ++x) images[x - 1] = sigma(x);
  const Permutation inv = sigma.inverse();
  for (int k = 5; k <= 10; ++k) {
    const Permutation conj = sigma * c[k - 5] * inv;
    const auto it = std::find(c.begin(), c.end(), conj);
    images[k - 1] = 5 + static_cast<int>(it - c.begin());
  }
  return Permutation::FromImages(std::move(images));
}

namespace {

std::vector<std::uint8_t> vertex_map(const Permutation& sigma) {
  const ClassGraph& g = class_graph();
  std::vector<std::uint8_t> map(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto image = static_cast<SubsetMask>(sigma.apply_mask(g.vertex(v)));
    map[v] = static_cast<std::uint8_t>(g.index_of(class_rep(image)));
  }
  return map;
}

Clique map_clique(const std::vector<std::uint8_t>& map, const Clique& c) {
  Clique out;
  for (std::size_t n = 0; n < kMaxClique; ++n) out[n] = map[c[n]];
  std::sort(out.begin(), out.end());
  return out;
}

struct CliqueHash {
  std::size_t operator()(const Clique& c) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : c) h = (h ^ v) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Clique act_on_clique(const Permutation& sigma, const Clique& c) {
  return map_clique(vertex_map(sigma), c);
}

OrbitResult s10_orbit(const Clique& c) {
  const std::vector<std::vector<std::uint8_t>> gens = {
      vertex_map(Permutation::FromCycles(10, "(1,2)")),
      vertex_map(Permutation::FromCycles(10, "(1,2,3,4,5,6,7,8,9,10)"))};
  std::unordered_set<Clique, CliqueHash> seen{c};
  std::deque<Clique> queue{c};
  while (!queue.empty()) {
    const Clique cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Clique next = map_clique(g, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  OrbitResult r;
  r.orbit.assign(seen.begin(), seen.end());
  std::sort(r.orbit.begin(), r.orbit.end());
  r.orbit_size = r.orbit.size();
  Int factorial = 1;
  for (int k = 2; k <= 10; ++k) factorial *= k;
  if (factorial % Int(static_cast<unsigned long>(r.orbit_size)) != 0) {
    throw std::logic_error("orbit size does not divide 10!");
  }
  r.stabilizer_order = factorial / Int(static_cast<unsigned long>(r.orbit_size));
  return r;
}

std::string RootSystemType::to_string() const {
  std::ostringstream out;
  for (std::size_t n = 0; n < components.size(); ++n) {
    if (n) out << '+';
    out << components[n].family << components[n].rank;
  }
  return components.empty() ? "0" : out.str();
}

namespace {

char identify(int rank, std::size_t roots) {
  const auto k = static_cast<std::size_t>(rank);
  if (roots == k * (k + 1)) return 'A';
  if (k >= 4 && roots == 2 * k * (k - 1)) return 'D';
  if ((k == 6 && roots == 72) || (k == 7 && roots == 126) || (k == 8 && roots == 240)) {
    return 'E';
  }
  return '?';
}

}  // namespace

RootSystemType root_sublattice_type(std::span<const ScaledVector> gens) {
  const auto basis = hnf(IntMatrix::FromVectors(gens)).to_vectors();
  const RationalMatrix gram = gram_matrix(basis);
  std::vector<ScaledVector> roots;
  for (const auto& x : short_vectors(gram, make_rational(2))) {
    ScaledVector v;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      v += x[a].get_si() * basis[a];
    }
    if (scaled_dot(v, v) == 2 * kScale * kScale) roots.push_back(v);
  }
  std::sort(roots.begin(), roots.end());

  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (scaled_dot(roots[a], roots[b]) != 0) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<ScaledVector>> groups(n);
  for (std::size_t a = 0; a < n; ++a) groups[find(a)].push_back(roots[a]);

  RootSystemType t;
  t.total_roots = n;
  for (const auto& grp : groups) {
    if (grp.empty()) continue;
    RootComponent c;
    c.rank = static_cast<int>(rank(IntMatrix::FromVectors(grp)));
    c.roots = grp.size();
    c.family = identify(c.rank, c.roots);
    if (c.family == '?') t.recognized = false;
    t.components.push_back(c);
  }
  std::sort(t.components.begin(), t.components.end());
  return t;
}

}  // namespace eql::cliques
