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

#include "eqlines/colorings.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace eql::colorings {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("edge needs two distinct vertices");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  std::set<int> used;
  for (const auto& [a, b] : edges_) {
    if (a < 1) throw std::invalid_argument("matching vertex out of range");
    if (!used.insert(a).second || !used.insert(b).second) {
      throw std::invalid_argument("edges of a matching must be disjoint");
    }
  }
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.first, e.second));
}

Matching difference(const Matching& a, const Matching& b) {
  std::vector<Edge> out;
  for (const auto& e : a.edges()) {
    if (!b.contains(e)) out.push_back(e);
  }
  return Matching(std::move(out));
}

Matching relabel(const Permutation& sigma, const Matching& m) {
  std::vector<Edge> out;
  for (const auto& [a, b] : m.edges()) out.push_back(make_edge(sigma(a), sigma(b)));
  return Matching(std::move(out));
}

namespace {

bool edges_in_range(const Matching& m, int v) {
  return std::all_of(m.edges().begin(), m.edges().end(),
                     [v](const Edge& e) { return e.second <= v; });
}

// True iff the matchings are pairwise disjoint and cover E(K_v) exactly.
bool partitions_edges(const std::vector<Matching>& parts, int v) {
  std::set<Edge> seen;
  for (const auto& m : parts) {
    if (!edges_in_range(m, v)) return false;
    for (const auto& e : m.edges()) {
      if (!seen.insert(e).second) return false;
    }
  }
  return seen.size() == static_cast<std::size_t>(v * (v - 1) / 2);
}

}  // namespace

bool is_one_factorization(const OneFactorization& f) {
  const int v = f.vertices;
  if (v < 2 || v % 2 != 0 || f.factors.size() != static_cast<std::size_t>(v - 1)) {
    return false;
  }
  for (const auto& m : f.factors) {
    if (m.size() != static_cast<std::size_t>(v / 2)) return false;
  }
  return partitions_edges(f.factors, v);
}

bool is_proper_coloring(const ProperColoring& y) {
  if (y.vertices < 0 || y.classes.size() != static_cast<std::size_t>(y.vertices)) {
    return false;
  }
  return partitions_edges(y.classes, y.vertices);
}

Int telephone(int n) {
  if (n < 0) throw std::invalid_argument("telephone: n must be non-negative");
  Int prev = 1, cur = 1;
  for (int k = 2; k <= n; ++k) {
    Int next = cur + Int(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

void check_small(int v, int limit) {
  if (v < 0 || v > limit) throw std::invalid_argument("vertex count out of supported range");
}

void collect_matchings(int v, std::uint32_t free, std::vector<Edge>& stack,
                       bool perfect, std::vector<Matching>& out) {
  if (free == 0) {
    out.emplace_back(stack);
    return;
  }
  const int a = std::countr_zero(free);
  const std::uint32_t rest = free & ~(1U << a);
  if (!perfect) collect_matchings(v, rest, stack, perfect, out);
  for (int b = a + 1; b < v; ++b) {
    if (!(rest & (1U << b))) continue;
    stack.emplace_back(a + 1, b + 1);
    collect_matchings(v, rest & ~(1U << b), stack, perfect, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Matching> all_matchings(int v) {
  check_small(v, 12);
  std::vector<Matching> out;
  std::vector<Edge> stack;
  collect_matchings(v, (1U << v) - 1, stack, false, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> perfect_matchings(int v) {
  check_small(v, 12);
  std::vector<Matching> out;
  if (v % 2 != 0) return out;
  std::vector<Edge> stack;
  collect_matchings(v, (1U << v) - 1, stack, true, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int count_matchings(int v) {
  return Int(static_cast<unsigned long>(all_matchings(v).size()));
}

OneFactorization round_robin(int n) {
  if (n < 1) throw std::invalid_argument("round_robin: n must be positive");
  const int m = 2 * n - 1;
  auto wrap = [m](int x) { return ((x - 1) % m + m) % m + 1; };
  OneFactorization f{2 * n, {}};
  for (int k = 1; k <= m; ++k) {
    std::vector<Edge> edges{make_edge(2 * n, k)};
    for (int i = 1; i <= n - 1; ++i) edges.push_back(make_edge(wrap(k - i), wrap(k + i)));
    f.factors.emplace_back(std::move(edges));
  }
  return f;
}

ProperColoring coloring_from_h_sequence(const std::vector<int>& seq) {
  const OneFactorization h = round_robin(5);
  ProperColoring y{10, {}};
  for (int k : seq) {
    if (k < 0 || k > 9) throw std::invalid_argument("H index must lie in 0..9");
    y.classes.push_back(k == 0 ? Matching() : h.factors[k - 1]);
  }
  if (!is_proper_coloring(y)) throw std::invalid_argument("H sequence is not a proper colouring");
  return y;
}

ProperColoring inject_f(const OneFactorization& f, const Matching& m) {
  ProperColoring y{f.vertices, {}};
  for (const auto& factor : f.factors) y.classes.push_back(difference(factor, m));
  y.classes.push_back(m);
  return y;
}

namespace {

// Edge indices of K_v and perfect matchings as edge bitmasks (v <= 10).
struct EdgeIndex {
  explicit EdgeIndex(int v) : v(v), index(v + 1, std::vector<int>(v + 1, -1)) {
    for (int a = 1; a <= v; ++a) {
      for (int b = a + 1; b <= v; ++b) {
        index[a][b] = index[b][a] = static_cast<int>(edges.size());
        edges.emplace_back(a, b);
      }
    }
    for (const auto& pm : perfect_matchings(v)) {
      std::uint64_t mask = 0;
      for (const auto& [a, b] : pm.edges()) mask |= std::uint64_t{1} << index[a][b];
      masks.push_back(mask);
    }
    by_edge.resize(edges.size());
    for (std::size_t p = 0; p < masks.size(); ++p) {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (masks[p] & (std::uint64_t{1} << e)) by_edge[e].push_back(masks[p]);
      }
    }
  }

  std::uint64_t all_edges() const {
    return edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
  }

  Matching to_matching(std::uint64_t mask) const {
    std::vector<Edge> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (mask & (std::uint64_t{1} << e)) out.push_back(edges[e]);
    }
    return Matching(std::move(out));
  }

  int v;
  std::vector<std::vector<int>> index;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::uint64_t>> by_edge;
};

// Each level picks the factor through the smallest uncovered edge, so every
// unordered factorization is reached exactly once.
std::uint64_t count_from(const EdgeIndex& ix, std::uint64_t uncovered) {
  if (uncovered == 0) return 1;
  const int e = std::countr_zero(uncovered);
  std::uint64_t total = 0;
  for (std::uint64_t pm : ix.by_edge[e]) {
    if ((pm & ~uncovered) == 0) total += count_from(ix, uncovered & ~pm);
  }
  return total;
}

void list_from(const EdgeIndex& ix, std::uint64_t uncovered, std::vector<std::uint64_t>& stack,
               std::vector<OneFactorization>& out) {
  if (uncovered == 0) {
    OneFactorization f{ix.v, {}};
    for (std::uint64_t m : stack) f.factors.push_back(ix.to_matching(m));
    out.push_back(std::move(f));
    return;
  }
  const int e = std::countr_zero(uncovered);
  for (std::uint64_t pm : ix.by_edge[e]) {
    if ((pm & ~uncovered) != 0) continue;
    stack.push_back(pm);
    list_from(ix, uncovered & ~pm, stack, out);
    stack.pop_back();
  }
}

void check_even(int v, int limit) {
  if (v < 2 || v % 2 != 0 || v > limit) {
    throw std::invalid_argument("vertex count must be even and within the supported range");
  }
}

}  // namespace

std::vector<OneFactorization> enumerate_factorizations(int v) {
  check_even(v, 8);
  const EdgeIndex ix(v);
  std::vector<OneFactorization> out;
  std::vector<std::uint64_t> stack;
  list_from(ix, ix.all_edges(), stack, out);
  return out;
}

Int count_factorizations(int v, unsigned jobs,
                         const std::function<void(std::size_t, std::size_t)>& progress) {
  check_even(v, 10);
  const EdgeIndex ix(v);
  const std::uint64_t all = ix.all_edges();
  const auto& branches = ix.by_edge[0];
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::uint64_t total = 0;
  std::mutex merge;
  auto worker = [&] {
    for (std::size_t b = next++; b < branches.size(); b = next++) {
      const std::uint64_t part = count_from(ix, all & ~branches[b]);
      std::lock_guard<std::mutex> lock(merge);
      total += part;
      ++done;
      if (progress) progress(done, branches.size());
    }
  };
  jobs = std::max(1U, jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return Int(static_cast<unsigned long>(total));
}

InjectivityReport check_injection(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("check_injection: n must be 1, 2 or 3");
  const int v = 2 * n;
  const auto matchings = all_matchings(v);
  InjectivityReport report;
  std::set<ProperColoring> images;
  for (const auto& f : enumerate_factorizations(v)) {
    std::vector<std::size_t> order(f.factors.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      OneFactorization ordered{v, {}};
      for (std::size_t k : order) ordered.factors.push_back(f.factors[k]);
      for (const auto& m : matchings) {
        ProperColoring y = inject_f(ordered, m);
        ++report.inputs;
        if (!is_proper_coloring(y)) report.all_valid = false;
        images.insert(std::move(y));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  report.distinct_outputs = images.size();
  return report;
}

xset::AesSet coloring_to_aes(const ProperColoring& y) {
  if (y.vertices != 10 || !is_proper_coloring(y)) {
    throw std::invalid_argument("coloring_to_aes: need a proper colouring of K_10");
  }
  std::vector<xset::XLabel> labels;
  for (int i = 1; i <= 10; ++i) {
    for (const auto& [j, k] : y.classes[i - 1].edges()) {
      labels.push_back(xset::XLabel::V1(i, j, k));
    }
  }
  return xset::AesSet(std::move(labels));
}

ProperColoring aes_to_coloring(const xset::AesSet& s) {
  std::vector<std::vector<Edge>> classes(10);
  for (const auto& x : s.labels()) {
    if (x.kind() != xset::XKind::kV1) {
      throw std::invalid_argument("aes_to_coloring: label outside X_1: " + x.to_string());
    }
    classes[x.i() - 1].emplace_back(x.j(), x.k());
  }
  if (!xset::is_aes(s)) throw std::invalid_argument("aes_to_coloring: not an AES");
  ProperColoring y{10, {}};
  for (auto& c : classes) y.classes.emplace_back(std::move(c));
  return y;
}

ProperColoring random_coloring(std::uint64_t seed) {
  static const std::vector<Matching> matchings = all_matchings(10);
  std::mt19937_64 rng(seed);
  std::vector<int> images(10);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  const Permutation sigma = Permutation::FromImages(images);
  OneFactorization f = round_robin(5);
  for (auto& m : f.factors) m = relabel(sigma, m);
  std::shuffle(f.factors.begin(), f.factors.end(), rng);
  std::uniform_int_distribution<std::size_t> pick(0, matchings.size() - 1);
  ProperColoring y = inject_f(f, matchings[pick(rng)]);
  // Move the matching class to a random position.
  std::uniform_int_distribution<std::size_t> slot(0, 9);
  std::swap(y.classes[9], y.classes[slot(rng)]);
  return y;
}

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

CountChain count_chain() {
  CountChain c;
  c.factorial9 = factorial(9);
  c.telephone10 = telephone(10);
  c.factorizations5 = 6240;
  c.colorings_lower = c.factorial9 * c.telephone10 * c.factorizations5;
  c.clique_count = 151200;
  c.aes_lower = c.clique_count * c.colorings_lower;
  c.group_order_squared = factorial(10) * factorial(10);
  c.isometry_lower = c.aes_lower / c.group_order_squared;
  return c;
}

std::vector<Int> printed_factorization_list() {
  return {Int(1), Int(1), Int(6), Int(6240), Int("1225566720"),
          Int("252282619805368320")};
}

nlohmann::json to_json(const ProperColoring& y) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : y.classes) {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& [a, b] : m.edges()) cls.push_back({a, b});
    out.push_back(cls);
  }
  return out;
}

ProperColoring coloring_from_json(const nlohmann::json& j) {
  ProperColoring y{static_cast<int>(j.size()), {}};
  for (const auto& cls : j) {
    std::vector<Edge> edges;
    for (const auto& e : cls) {
      if (e.size() != 2) throw std::invalid_argument("edges must have two endpoints");
      edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    y.classes.emplace_back(std::move(edges));
  }
  if (!is_proper_coloring(y)) throw std::invalid_argument("not a proper colouring");
  return y;
}

}  // namespace eql::colorings
