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

#include "eqlines/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eql {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& value) { return value.get_str(); }
std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// ScaledVector

ScaledVector ScaledVector::FromBlocks(std::span<const std::int64_t> first,
                                      std::span<const std::int64_t> second,
                                      std::span<const std::int64_t> a1) {
  if (first.size() != 10 || second.size() != 10 || a1.size() != 2) {
    throw std::invalid_argument("ScaledVector blocks must have sizes 10, 10, 2");
  }
  ScaledVector v;
  std::copy(first.begin(), first.end(), v.coords_.begin());
  std::copy(second.begin(), second.end(), v.coords_.begin() + 10);
  std::copy(a1.begin(), a1.end(), v.coords_.begin() + 20);
  return v;
}

namespace {
std::pair<std::size_t, std::size_t> block_range(Block b) {
  switch (b) {
    case Block::kFirst:
      return {0, 10};
    case Block::kSecond:
      return {10, 10};
    case Block::kA1:
      return {20, 2};
  }
  return {0, 0};
}
}  // namespace

std::span<const std::int64_t> ScaledVector::block(Block b) const {
  auto [start, len] = block_range(b);
  return std::span<const std::int64_t>(coords_).subspan(start, len);
}

std::span<std::int64_t> ScaledVector::block(Block b) {
  auto [start, len] = block_range(b);
  return std::span<std::int64_t>(coords_).subspan(start, len);
}

bool ScaledVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c == 0; });
}

ScaledVector& ScaledVector::operator+=(const ScaledVector& other) {
  for (int i = 0; i < kDim; ++i) coords_[i] += other.coords_[i];
  return *this;
}

ScaledVector& ScaledVector::operator-=(const ScaledVector& other) {
  for (int i = 0; i < kDim; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

ScaledVector operator-(const ScaledVector& a) {
  ScaledVector r;
  for (int i = 0; i < kDim; ++i) r.coords_[i] = -a.coords_[i];
  return r;
}

ScaledVector operator*(std::int64_t k, const ScaledVector& a) {
  ScaledVector r;
  for (int i = 0; i < kDim; ++i) r.coords_[i] = k * a.coords_[i];
  return r;
}

std::string ScaledVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < kDim; ++i) {
    if (i == 10 || i == 20) out << " |";
    if (i > 0) out << " ";
    out << coords_[i];
  }
  out << ")";
  return out.str();
}

std::int64_t scaled_dot(const ScaledVector& u, const ScaledVector& v) {
  std::int64_t s = 0;
  for (int i = 0; i < kDim; ++i) s += u[i] * v[i];
  return s;
}

Rational dot(const ScaledVector& u, const ScaledVector& v) {
  return make_rational(scaled_dot(u, v), kScale * kScale);
}

std::int64_t integral_dot(const ScaledVector& u, const ScaledVector& v) {
  const std::int64_t s = scaled_dot(u, v);
  if (s % (kScale * kScale) != 0) {
    throw std::logic_error("inner product is not an integer: " +
                           std::to_string(s) + "/100");
  }
  return s / (kScale * kScale);
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::FromVectors(std::span<const ScaledVector> vectors) {
  IntMatrix m(vectors.size(), kDim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    for (int c = 0; c < kDim; ++c) m(r, c) = static_cast<long>(vectors[r][c]);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

std::vector<ScaledVector> IntMatrix::to_vectors() const {
  if (cols_ != kDim) throw std::invalid_argument("expected 22 columns");
  std::vector<ScaledVector> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (int c = 0; c < kDim; ++c) {
      const Int& e = (*this)(r, c);
      if (!e.fits_slong_p()) throw std::overflow_error("entry exceeds 64 bits");
      out[r][c] = e.get_si();
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("dimension mismatch");
  }
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) {
      out << (c ? ", " : "") << (*this)(r, c).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::Monomial(const Int& coefficient,
                                      std::size_t degree) {
  std::vector<Int> c(degree + 1);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::LinearPower(const Int& root,
                                         std::size_t multiplicity) {
  return pow(IntPolynomial(std::vector<Int>{-root, Int(1)}), multiplicity);
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Int IntPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Int(0);
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("matrix must be square");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Int> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
  }
  return IntPolynomial(std::move(d));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& c : coefficients_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> c = coefficients_;
  for (Int& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coefficient(i) + b.coefficient(i);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coefficient(i) - b.coefficient(i);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Int& c = coefficients_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coefficients_.size());
  for (const Int& c : coefficients_) out.push_back(c.get_str());
  return out;
}

IntPolynomial pow(const IntPolynomial& base, std::size_t exponent) {
  IntPolynomial result{1};
  IntPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  std::vector<Int> r = a.coefficients();
  const std::vector<Int>& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  const Int& lead = d.back();
  while (r.size() > db && !r.empty()) {
    const Int top = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (Int& x : r) x *= lead;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= top * d[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

std::size_t strip_root(IntPolynomial& p, const Int& root) {
  std::size_t mult = 0;
  while (!p.is_zero() && p.evaluate(root) == 0) {
    // Synthetic division by (x - root).
    const auto& c = p.coefficients();
    std::vector<Int> q(c.size() - 1);
    Int carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = carry * root + c[k];
      q[k - 1] = carry;
    }
    p = IntPolynomial(std::move(q));
    ++mult;
  }
  return mult;
}

// ---------------------------------------------------------------------------
// Lattice algebra

namespace {

// row_dst -= q * row_src, over columns [from, cols).
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q,
              std::size_t from) {
  for (std::size_t c = from; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

}  // namespace

IntMatrix hnf(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  Int q;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        if (best == rows || mpz_cmpabs(m(r, col).get_mpz_t(), m(best, col).get_mpz_t()) < 0) best = r;
      }
      if (best == rows) break;
      have_pivot = true;
      m.swap_rows(pivot_row, best);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(r, col).get_mpz_t(),
                   m(pivot_row, col).get_mpz_t());
        axpy_row(m, r, pivot_row, q, col);
        if (m(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (m(pivot_row, col) < 0) {
      for (std::size_t c = col; c < cols; ++c) m(pivot_row, c) = -m(pivot_row, c);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      mpz_fdiv_q(q.get_mpz_t(), m(r, col).get_mpz_t(),
                 m(pivot_row, col).get_mpz_t());
      if (q != 0) axpy_row(m, r, pivot_row, q, col);
    }
    ++pivot_row;
  }
  IntMatrix out(pivot_row, cols);
  for (std::size_t r = 0; r < pivot_row; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r, c);
  }
  return out;
}

bool lattice_equal(std::span<const ScaledVector> gens_a,
                   std::span<const ScaledVector> gens_b) {
  return hnf(IntMatrix::FromVectors(gens_a)) ==
         hnf(IntMatrix::FromVectors(gens_b));
}

Int determinant(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Int g;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const Int a = m(i, col);
      const Int b = m(r, col);
      g = 0;
      for (std::size_t c = col; c < cols; ++c) {
        m(i, c) = m(i, c) * b - a * m(r, c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, c).get_mpz_t());
      }
      if (g > 1) {
        for (std::size_t c = col; c < cols; ++c) {
          mpz_divexact(m(i, c).get_mpz_t(), m(i, c).get_mpz_t(), g.get_mpz_t());
        }
      }
    }
    ++r;
  }
  return r;
}

IntMatrix scaled_gram(std::span<const ScaledVector> gens) {
  IntMatrix g(gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      g(i, j) = static_cast<long>(scaled_dot(gens[i], gens[j]));
      g(j, i) = g(i, j);
    }
  }
  return g;
}

Rational gram_det(std::span<const ScaledVector> gens) {
  const Int det = determinant(scaled_gram(gens));
  if (det == 0) throw std::domain_error("gram_det: generators are dependent");
  Int denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), kScale * kScale, gens.size());
  return make_rational(det, denom);
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square");
  const std::size_t n = m.rows();
  // p holds det(x I - A_k) for the leading k x k block, highest degree first.
  std::vector<Int> p{Int(1)};
  std::vector<Int> v, w, t;
  for (std::size_t k = 0; k < n; ++k) {
    // Block decomposition of A_{k+1}: leading A_k, column C, row R, corner.
    t.assign(k + 2, Int(0));
    t[0] = 1;
    t[1] = -m(k, k);
    v.assign(k, Int(0));
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t s = 2; s <= k + 1; ++s) {
      Int acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += m(k, i) * v[i];
      t[s] = -acc;
      if (s == k + 1) break;
      w.assign(k, Int(0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) w[i] += m(i, j) * v[j];
      }
      v.swap(w);
    }
    std::vector<Int> next(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) {
        next[i] += t[i - j] * p[j];
      }
    }
    p.swap(next);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

std::size_t distinct_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("distinct_root_count of zero");
  if (p.degree() == 0) return 0;
  const IntPolynomial g = gcd(p, p.derivative());
  return static_cast<std::size_t>(p.degree() - g.degree());
}

RationalMatrix gram_matrix(std::span<const ScaledVector> gens) {
  RationalMatrix g(gens.size(), std::vector<Rational>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      g[i][j] = dot(gens[i], gens[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw std::domain_error("inverse of singular matrix");
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Rational piv = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= piv;
      inv[col][c] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<std::size_t> independent_subset(std::span<const ScaledVector> gens) {
  std::vector<std::size_t> chosen;
  std::vector<ScaledVector> basis;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    basis.push_back(gens[i]);
    if (rank(IntMatrix::FromVectors(basis)) == basis.size()) {
      chosen.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

namespace {

// Depth-first Fincke-Pohst over the LDL^T form
//   q(x) = sum_j d_j (x_j + sum_{i>j} mu_ij x_i)^2.
class ShortVectorSearch {
 public:
  ShortVectorSearch(const RationalMatrix& gram, Rational bound)
      : n_(gram.size()), bound_(std::move(bound)), mu_(n_, std::vector<Rational>(n_)),
        d_(n_), x_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational s = gram[i][j];
        for (std::size_t l = 0; l < j; ++l) s -= mu_[j][l] * mu_[i][l] * d_[l];
        mu_[i][j] = s / d_[j];
      }
      Rational s = gram[i][i];
      for (std::size_t l = 0; l < i; ++l) s -= mu_[i][l] * mu_[i][l] * d_[l];
      if (s <= 0) throw std::domain_error("short_vectors: Gram matrix not positive definite");
      d_[i] = s;
    }
  }

  std::vector<std::vector<Int>> run() {
    if (n_ > 0) descend(n_ - 1, bound_);
    return std::move(out_);
  }

 private:
  void descend(std::size_t level, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t i = level + 1; i < n_; ++i) center -= mu_[i][level] * x_[i];
    // Walk upward from ceil(center), then downward from ceil(center) - 1.
    Int start;
    mpz_cdiv_q(start.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    for (int dir = 0; dir < 2; ++dir) {
      Int xi = dir == 0 ? start : Int(start - 1);
      while (true) {
        const Rational diff = Rational(xi) - center;
        const Rational used = d_[level] * diff * diff;
        if (used > remaining) break;
        x_[level] = xi;
        if (level == 0) {
          if (!is_zero()) out_.push_back(x_);
        } else {
          descend(level - 1, remaining - used);
        }
        if (dir == 0) ++xi; else --xi;
      }
    }
    x_[level] = 0;
  }

  bool is_zero() const {
    for (const Int& v : x_) if (v != 0) return false;
    return true;
  }

  std::size_t n_;
  Rational bound_;
  RationalMatrix mu_;
  std::vector<Rational> d_;
  std::vector<Int> x_;
  std::vector<std::vector<Int>> out_;
};

}  // namespace

std::vector<std::vector<Int>> short_vectors(const RationalMatrix& gram,
                                            const Rational& bound) {
  return ShortVectorSearch(gram, bound).run();
}

}  // namespace eql
