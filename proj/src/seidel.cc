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

#include "eqlines/seidel.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "eqlines/root_lattices.hpp"

namespace eql::seidel {

namespace {

constexpr std::int64_t kLineNorm = 10 * kScale * kScale;
constexpr std::int64_t kLineDot = 2 * kScale * kScale;

void require_aes(const xset::AesSet& s) {
  if (!xset::is_aes(s)) throw std::invalid_argument("not an affine equiangular set");
}

}  // namespace

LineSystem lines_from_aes(const xset::AesSet& s) {
  require_aes(s);
  const ScaledVector r = roots::root_r();
  LineSystem lines;
  for (const auto& u : s.realizations()) lines.vectors.push_back(2 * u - r);
  for (std::size_t a = 0; a < lines.vectors.size(); ++a) {
    if (scaled_dot(lines.vectors[a], lines.vectors[a]) != kLineNorm) {
      throw std::logic_error("line vector with unexpected norm");
    }
    for (std::size_t b = a + 1; b < lines.vectors.size(); ++b) {
      const std::int64_t d = scaled_dot(lines.vectors[a], lines.vectors[b]);
      if (d != kLineDot && d != -kLineDot) throw std::logic_error("lines are not equiangular");
    }
  }
  return lines;
}

std::size_t line_gram_rank(const LineSystem& lines) {
  return rank(scaled_gram(lines.vectors));
}

IntMatrix seidel_matrix(const xset::AesSet& s) {
  const LineSystem lines = lines_from_aes(s);
  const std::size_t n = lines.vectors.size();
  IntMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      // W_ab = (line_a, line_b) / 2 = +-1, and S_ab = -W_ab.
      m(a, b) = -integral_dot(lines.vectors[a], lines.vectors[b]) / 2;
    }
  }
  return m;
}

Analysis analyze(const xset::AesSet& s) {
  Analysis a;
  a.charpoly = char_poly(seidel_matrix(s));
  IntPolynomial rest = a.charpoly;
  a.mult5 = strip_root(rest, Int(5));
  a.dimension = s.size() - a.mult5;
  a.distinct_eigs = distinct_root_count(a.charpoly);
  return a;
}

Factored factor_integer_roots(IntPolynomial p, long bound) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Factored f;
  for (long x = bound; x >= -bound; --x) {
    const std::size_t mult = strip_root(p, Int(x));
    if (mult > 0) f.roots.emplace_back(Int(x), mult);
  }
  f.residual = std::move(p);
  return f;
}

namespace {

std::string linear_factor(const Int& root) {
  if (root == 0) return "x";
  std::ostringstream out;
  out << "(x" << (root > 0 ? "-" : "+") << Int(abs(root)).get_str() << ")";
  return out.str();
}

std::string compact(const IntPolynomial& p) {
  std::string s = p.to_string();
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '*') out += c;
  }
  return out;
}

}  // namespace

std::string Factored::to_string() const {
  std::ostringstream out;
  for (const auto& [root, mult] : roots) {
    out << linear_factor(root);
    if (mult > 1) out << '^' << mult;
  }
  const bool unit = residual.degree() == 0 && residual.leading() == 1;
  if (!unit) {
    if (residual.degree() == 0 && roots.empty()) return compact(residual);
    out << '(' << compact(residual) << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "1" : s;
}

bool switching_invariance_check(const xset::AesSet& s, int trials, std::uint64_t seed) {
  const IntPolynomial reference = char_poly(seidel_matrix(s));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < trials; ++t) {
    std::vector<xset::XLabel> subset;
    for (const auto& x : s.labels()) {
      if (coin(rng)) subset.push_back(x);
    }
    const xset::AesSet switched = xset::switch_set(s, xset::AesSet(std::move(subset)));
    if (char_poly(seidel_matrix(switched)) != reference) return false;
  }
  return true;
}

IntPolynomial printed_example_polynomial(int which) {
  const IntPolynomial base = IntPolynomial::LinearPower(Int(5), 39);
  if (which == 1) {
    return base * IntPolynomial::LinearPower(Int(-9), 2) *
           IntPolynomial::LinearPower(Int(-11), 11) *
           IntPolynomial::LinearPower(Int(-13), 3) * IntPolynomial{36, 17, 1};
  }
  if (which == 2) {
    return base * IntPolynomial::LinearPower(Int(-9), 1) *
           IntPolynomial::LinearPower(Int(-11), 13) *
           IntPolynomial::LinearPower(Int(-13), 2) * IntPolynomial{32, 17, 1};
  }
  throw std::invalid_argument("example polynomial index must be 1 or 2");
}

nlohmann::json to_json(const Analysis& a) {
  const long bound = static_cast<long>(std::max<long>(a.charpoly.degree(), 1));
  return {{"charpoly", factor_integer_roots(a.charpoly, bound).to_string()},
          {"coefficients", a.charpoly.to_decimal_strings()},
          {"mult5", a.mult5},
          {"dimension", a.dimension},
          {"distinct_eigs", a.distinct_eigs}};
}

}  // namespace eql::seidel
