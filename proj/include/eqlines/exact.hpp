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

// Exact integer and rational linear algebra used throughout the library.
//
// Every vector of the ambient space Q^10 + Q^10 + Q^2 is stored as 10 times
// its actual coordinates (a ScaledVector).  All lattices handled here live in
// (1/10)Z^22, so the scaled coordinates are plain integers and every inner
// product is an integer divided by 100.  No floating point is used anywhere.

#ifndef EQLINES_EXACT_HPP_
#define EQLINES_EXACT_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eql {

using Int = mpz_class;
using Rational = mpq_class;

// Builds a canonicalized rational num/den.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Int& num, const Int& den);

std::string to_string(const Int& value);
std::string to_string(const Rational& value);

inline constexpr int kScale = 10;
inline constexpr int kDim = 22;

// Coordinate blocks: [0,10) first A9 ambient, [10,20) second A9 ambient,
// [20,22) A1 ambient.
enum class Block { kFirst, kSecond, kA1 };

class ScaledVector {
 public:
  using Coords = std::array<std::int64_t, kDim>;

  ScaledVector() : coords_{} {}
  explicit ScaledVector(const Coords& coords) : coords_(coords) {}
  // Concatenates three blocks of sizes 10, 10 and 2.
  static ScaledVector FromBlocks(std::span<const std::int64_t> first,
                                 std::span<const std::int64_t> second,
                                 std::span<const std::int64_t> a1);

  const Coords& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  std::span<const std::int64_t> block(Block b) const;
  std::span<std::int64_t> block(Block b);

  bool is_zero() const;

  ScaledVector& operator+=(const ScaledVector& other);
  ScaledVector& operator-=(const ScaledVector& other);
  friend ScaledVector operator+(ScaledVector a, const ScaledVector& b) {
    return a += b;
  }
  friend ScaledVector operator-(ScaledVector a, const ScaledVector& b) {
    return a -= b;
  }
  friend ScaledVector operator-(const ScaledVector& a);
  friend ScaledVector operator*(std::int64_t k, const ScaledVector& a);

  friend bool operator==(const ScaledVector&, const ScaledVector&) = default;
  friend auto operator<=>(const ScaledVector&, const ScaledVector&) = default;

  std::string to_string() const;

 private:
  Coords coords_;
};

// Raw integer product of scaled coordinates (100 times the inner product).
std::int64_t scaled_dot(const ScaledVector& u, const ScaledVector& v);

// The inner product of the descaled vectors.
Rational dot(const ScaledVector& u, const ScaledVector& v);

// Inner product that must be an integer; throws std::logic_error otherwise.
std::int64_t integral_dot(const ScaledVector& u, const ScaledVector& v);

// Dense matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix Identity(std::size_t n);
  // One row per vector, 22 columns.
  static IntMatrix FromVectors(std::span<const ScaledVector> vectors);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  // Rows interpreted as scaled vectors; requires 22 columns and entries that
  // fit in 64 bits.
  std::vector<ScaledVector> to_vectors() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Integer polynomial, dense, lowest degree first.  The zero polynomial has no
// coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);
  static IntPolynomial Monomial(const Int& coefficient, std::size_t degree);
  // (x - root)^multiplicity
  static IntPolynomial LinearPower(const Int& root, std::size_t multiplicity);

  bool is_zero() const { return coefficients_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return coefficients_; }
  // Coefficient of x^i, zero past the degree.
  Int coefficient(std::size_t i) const;
  const Int& leading() const { return coefficients_.back(); }

  Int evaluate(const Int& x) const;
  IntMatrix evaluate(const IntMatrix& m) const;
  IntPolynomial derivative() const;
  Int content() const;
  IntPolynomial primitive_part() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Human-readable form, e.g. "x^2 + 17*x + 36".
  std::string to_string() const;
  // Decimal strings, lowest degree first.
  std::vector<std::string> to_decimal_strings() const;

 private:
  void trim();
  std::vector<Int> coefficients_;
};

IntPolynomial pow(const IntPolynomial& base, std::size_t exponent);

// Pseudo-remainder of a by b (b nonzero).
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

// Divides p by (x - root) as many times as possible; returns the multiplicity
// and leaves the cofactor in p.
std::size_t strip_root(IntPolynomial& p, const Int& root);

// Row-style Hermite normal form of the integer row lattice.  Zero rows are
// dropped, pivots are positive and entries above a pivot are reduced into
// [0, pivot).  Two matrices span the same row lattice iff their HNFs agree.
IntMatrix hnf(IntMatrix m);

// True iff the integer spans of the two scaled generator sets coincide.
bool lattice_equal(std::span<const ScaledVector> gens_a,
                   std::span<const ScaledVector> gens_b);

// Fraction-free (Bareiss) determinant.
Int determinant(IntMatrix m);

// Rank over Q by fraction-free elimination.
std::size_t rank(IntMatrix m);

// Integer Gram matrix of the scaled vectors (100 times the true Gram matrix).
IntMatrix scaled_gram(std::span<const ScaledVector> gens);

// Determinant of the exact Gram matrix of the descaled generators.  Throws
// std::domain_error when the generators are linearly dependent.
Rational gram_det(std::span<const ScaledVector> gens);

// det(x I - m) by the Berkowitz recursion, division free.
IntPolynomial char_poly(const IntMatrix& m);

// Number of distinct complex roots: deg p - deg gcd(p, p').  Throws
// std::domain_error on the zero polynomial.
std::size_t distinct_root_count(const IntPolynomial& p);

// Square matrix of rationals, row-major nested vectors.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact Gram matrix of the descaled generators.
RationalMatrix gram_matrix(std::span<const ScaledVector> gens);

// Gauss-Jordan inverse; throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(std::span<const ScaledVector> gens);

// All nonzero integer coefficient vectors x with x^T G x <= bound for a
// positive definite G, by exact Fincke-Pohst enumeration (both x and -x are
// returned).
std::vector<std::vector<Int>> short_vectors(const RationalMatrix& gram,
                                            const Rational& bound);

}  // namespace eql

#endif  // EQLINES_EXACT_HPP_
