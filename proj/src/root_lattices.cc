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

#include "eqlines/root_lattices.hpp"

#include <algorithm>
#include <stdexcept>

namespace eql::roots {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// floor(q) for a rational q.
std::int64_t floor_of(const Rational& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

void check_label(const CosetLabel& c) {
  if (c.n < 1) throw std::invalid_argument("A_n needs n >= 1");
}

}  // namespace

Rational BlockVector::norm() const {
  std::int64_t s = 0;
  for (std::int64_t x : coords) s += x * x;
  return make_rational(s, scale * scale);
}

BlockVector BlockVector::rescaled(std::int64_t new_scale) const {
  BlockVector out{coords, new_scale};
  for (std::int64_t& x : out.coords) {
    const std::int64_t num = x * new_scale;
    if (num % scale != 0) {
      throw std::domain_error("vector not integral at the requested scale");
    }
    x = num / scale;
  }
  return out;
}

BlockVector glue_vector(int n) {
  if (n < 1 || kScale % (n + 1) != 0) {
    throw std::invalid_argument("glue_vector: n+1 must divide 10");
  }
  BlockVector v{std::vector<std::int64_t>(n + 1, kScale / (n + 1)), kScale};
  v.coords[n] = -static_cast<std::int64_t>(n) * kScale / (n + 1);
  return v;
}

std::vector<BlockVector> min_coset_reps(CosetLabel c) {
  check_label(c);
  const int d = c.n + 1;
  if (c.m < 1 || c.m > d) throw std::invalid_argument("min_coset_reps: m out of range");
  std::vector<BlockVector> out;
  // Walk all m-subsets via a selection mask.
  std::vector<bool> in_subset(d, false);
  std::fill(in_subset.begin(), in_subset.begin() + c.m, true);
  do {
    BlockVector v{std::vector<std::int64_t>(d), d};
    for (int i = 0; i < d; ++i) v.coords[i] = in_subset[i] ? -(d - c.m) : c.m;
    out.push_back(std::move(v));
  } while (std::prev_permutation(in_subset.begin(), in_subset.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Rational coset_min_norm(CosetLabel c) {
  check_label(c);
  const int d = c.n + 1;
  const int m = mod(c.m, d);
  return make_rational(static_cast<long>(m) * (d - m), d);
}

namespace {

// Backtracking over z in Z^d with sum z = -m; the scaled coordinates are
// d z_i + m (so every coordinate is congruent to m/d mod 1) and the scaled
// squared norm must stay within `limit`.
class CosetEnumerator {
 public:
  CosetEnumerator(int d, int m, std::int64_t limit)
      : d_(d), m_(m), limit_(limit), z_(d) {}

  std::vector<BlockVector> run() {
    recurse(0, 0, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  std::int64_t term(std::int64_t z) const {
    const std::int64_t w = d_ * z + m_;
    return w * w;
  }

  // Least scaled norm reachable by `k` coordinates summing to `s`: spread the
  // sum as evenly as possible.
  std::int64_t tail_bound(int k, std::int64_t s) const {
    if (k == 0) return 0;
    std::int64_t q = s / k;
    if (s % k != 0 && s < 0) --q;
    const std::int64_t extra = s - q * k;
    return extra * term(q + 1) + (k - extra) * term(q);
  }

  void recurse(int pos, std::int64_t sum, std::int64_t partial) {
    const int remaining = d_ - pos;
    if (remaining == 1) {
      const std::int64_t z = -m_ - sum;
      if (partial + term(z) <= limit_) {
        z_[pos] = z;
        emit();
      }
      return;
    }
    // |d z + m| <= sqrt(limit) bounds the range of z.
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= limit_) ++r;
    const std::int64_t lo = (-m_ - r) / d_ - 1;
    const std::int64_t hi = (-m_ + r) / d_ + 1;
    for (std::int64_t z = lo; z <= hi; ++z) {
      const std::int64_t p = partial + term(z);
      if (p > limit_) continue;
      if (p + tail_bound(remaining - 1, -m_ - sum - z) > limit_) continue;
      z_[pos] = z;
      recurse(pos + 1, sum + z, p);
    }
  }

  void emit() {
    BlockVector v{std::vector<std::int64_t>(d_), d_};
    for (int i = 0; i < d_; ++i) v.coords[i] = d_ * z_[i] + m_;
    out_.push_back(std::move(v));
  }

  int d_;
  int m_;
  std::int64_t limit_;
  std::vector<std::int64_t> z_;
  std::vector<BlockVector> out_;
};

}  // namespace

std::vector<BlockVector> enum_coset_vectors(CosetLabel c, const Rational& bound) {
  check_label(c);
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const int d = c.n + 1;
  const int m = mod(c.m, d);
  const std::int64_t limit = floor_of(bound * d * d);
  return CosetEnumerator(d, m, limit).run();
}

ScaledVector alpha() {
  const BlockVector a9 = glue_vector(9);
  BlockVector twice = a9;
  for (auto& x : twice.coords) x *= 2;
  return compose(a9, twice, glue_vector(1));
}

ScaledVector beta() {
  const BlockVector a9 = glue_vector(9);
  BlockVector twice = a9, neg = a9;
  for (auto& x : twice.coords) x *= 2;
  for (auto& x : neg.coords) x = -x;
  return compose(twice, neg, BlockVector{{0, 0}, kScale});
}

ScaledVector root_r() {
  ScaledVector r;
  r[20] = kScale;
  r[21] = -kScale;
  return r;
}

ScaledVector compose(const BlockVector& first, const BlockVector& second,
                     const BlockVector& a1) {
  const BlockVector f = first.rescaled(kScale);
  const BlockVector s = second.rescaled(kScale);
  const BlockVector t = a1.rescaled(kScale);
  return ScaledVector::FromBlocks(f.coords, s.coords, t.coords);
}

namespace {
bool block_in_root_lattice(std::span<const std::int64_t> b) {
  std::int64_t sum = 0;
  for (std::int64_t x : b) {
    if (x % kScale != 0) return false;
    sum += x;
  }
  return sum == 0;
}
}  // namespace

bool in_L(const ScaledVector& v) {
  return block_in_root_lattice(v.block(Block::kFirst)) &&
         block_in_root_lattice(v.block(Block::kSecond)) &&
         block_in_root_lattice(v.block(Block::kA1));
}

std::optional<LambdaCoset> lambda_membership(const ScaledVector& v) {
  const ScaledVector a = alpha();
  ScaledVector u = v;
  for (int m = 0; m < 10; ++m) {
    if (in_L(u)) return LambdaCoset{m};
    u -= a;
  }
  return std::nullopt;
}

std::optional<DualCoset> dual_membership(const ScaledVector& v) {
  const ScaledVector a = alpha();
  const ScaledVector b = beta();
  for (int j = 0; j < 2; ++j) {
    ScaledVector u = v - static_cast<std::int64_t>(j) * b;
    for (int i = 0; i < 10; ++i) {
      if (in_L(u)) return DualCoset{i, j};
      u -= a;
    }
  }
  return std::nullopt;
}

BlockCosets block_cosets(DualCoset d) {
  return {mod(d.i + 2 * d.j, 10), mod(2 * d.i - d.j, 10), mod(d.i, 2)};
}

std::vector<std::pair<int, int>> dual_glue_pairs_with_r() {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 10; ++i) {
    const BlockCosets b = block_cosets({i, 1});
    if (b.a1 == 1) out.emplace_back(b.first, b.second);
  }
  return out;
}

std::vector<ScaledVector> enum_dual_short_with_r(const Rational& bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  // (v, r) = 1 pins the A1 block to exactly alpha_1 = (1/2, -1/2), which
  // lives in the odd A1 coset.
  const BlockVector a1 = glue_vector(1);
  const Rational budget = bound - a1.norm();
  std::vector<ScaledVector> out;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 2; ++j) {
      const BlockCosets b = block_cosets({i, j});
      if (b.a1 != 1) continue;
      const Rational min1 = coset_min_norm({9, b.first});
      const Rational min2 = coset_min_norm({9, b.second});
      if (min1 + min2 > budget) continue;
      const auto firsts = enum_coset_vectors({9, b.first}, budget - min2);
      const auto seconds = enum_coset_vectors({9, b.second}, budget - min1);
      std::vector<Rational> second_norms;
      second_norms.reserve(seconds.size());
      for (const auto& s : seconds) second_norms.push_back(s.norm());
      for (const auto& f : firsts) {
        const Rational left = budget - f.norm();
        for (std::size_t k = 0; k < seconds.size(); ++k) {
          if (second_norms[k] <= left) out.push_back(compose(f, seconds[k], a1));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational dual_min_outside_lambda_with_r() {
  std::optional<Rational> best;
  for (auto [first, second] : dual_glue_pairs_with_r()) {
    const Rational n = coset_min_norm({9, first}) + coset_min_norm({9, second}) +
                       coset_min_norm({1, 1});
    if (!best || n < *best) best = n;
  }
  return *best;
}

namespace {

LatticeBases build_bases() {
  LatticeBases b;
  for (int blk = 0; blk < 2; ++blk) {
    for (int k = 0; k < 9; ++k) {
      ScaledVector v;
      v[blk * 10 + k] = kScale;
      v[blk * 10 + k + 1] = -kScale;
      b.L_basis.push_back(v);
    }
  }
  b.L_basis.push_back(root_r());

  std::vector<ScaledVector> gens = b.L_basis;
  gens.push_back(alpha());
  b.lambda_basis = hnf(IntMatrix::FromVectors(gens)).to_vectors();

  gens = b.lambda_basis;
  gens.push_back(beta());
  b.dual_basis = hnf(IntMatrix::FromVectors(gens)).to_vectors();

  if (b.lambda_basis.size() != 19 || b.dual_basis.size() != 19) {
    throw std::logic_error("lattice bases must have rank 19");
  }
  return b;
}

}  // namespace

const LatticeBases& lambda_bases() {
  static const LatticeBases bases = build_bases();
  return bases;
}

}  // namespace eql::roots
