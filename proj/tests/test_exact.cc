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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "eqlines/exact.hpp"
#include "eqlines/report.hpp"
#include "eqlines/root_lattices.hpp"
#include "eqlines/seidel.hpp"
#include "eqlines/x_vectors.hpp"
#include "test_support.hpp"

namespace eql {
namespace {

using testing::a9_basis;
using testing::random_matrix;
using testing::random_unimodular;
using testing::test_seed;

TEST(Dot, RootAndGlueNorms) {
  const ScaledVector r = roots::root_r();
  const ScaledVector a = roots::alpha();
  EXPECT_EQ(dot(r, r), make_rational(2));
  EXPECT_EQ(dot(a, a), make_rational(5));
  EXPECT_EQ(dot(xset::realize(xset::XLabel::V5({1, 2, 3, 4, 5})), r), make_rational(1));
}

TEST(Dot, IntegralDotRejectsFractions) {
  const ScaledVector g = roots::compose(roots::glue_vector(9), roots::BlockVector{std::vector<std::int64_t>(10, 0), 10},
                                        roots::BlockVector{{0, 0}, 10});
  EXPECT_EQ(dot(g, g), make_rational(9, 10));
  EXPECT_THROW(integral_dot(g, g), std::logic_error);
}

TEST(Dot, SymmetricAndBilinear) {
  std::mt19937_64 rng(test_seed());
  const auto& basis = roots::lambda_bases().lambda_basis;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const ScaledVector& u = basis[pick(rng)];
    const ScaledVector& v = basis[pick(rng)];
    const ScaledVector& w = basis[pick(rng)];
    const int a = coeff(rng);
    const int b = coeff(rng);
    EXPECT_EQ(dot(u, v), dot(v, u));
    EXPECT_EQ(dot(a * u + b * v, w), Rational(a * dot(u, w) + b * dot(v, w)));
  }
}

TEST(Hnf, SmallExample) {
  EXPECT_EQ(hnf(IntMatrix{{2, 0}, {0, 2}, {1, 1}}), (IntMatrix{{1, 1}, {0, 2}}));
}

TEST(Hnf, IdentityIsFixed) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(hnf(IntMatrix::Identity(n)), IntMatrix::Identity(n));
}

TEST(Hnf, LambdaGeneratorsAgreeWithBasis) {
  const auto& bases = roots::lambda_bases();
  std::vector<ScaledVector> gens = bases.L_basis;
  gens.push_back(roots::alpha());
  EXPECT_EQ(hnf(IntMatrix::FromVectors(gens)), hnf(IntMatrix::FromVectors(bases.lambda_basis)));
}

TEST(Hnf, IdempotentAndUnimodularInvariant) {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 2 + t % 5;
    const IntMatrix m = random_matrix(rng, rows, 6, -6, 6);
    const IntMatrix h = hnf(m);
    EXPECT_EQ(hnf(h), h);
    EXPECT_EQ(hnf(random_unimodular(rng, rows) * m), h);
  }
}

TEST(LatticeEqual, Examples) {
  const auto& bases = roots::lambda_bases();
  std::vector<ScaledVector> with_r = bases.lambda_basis;
  with_r.push_back(roots::root_r());
  EXPECT_TRUE(lattice_equal(bases.lambda_basis, with_r));
  EXPECT_FALSE(lattice_equal(bases.L_basis, bases.lambda_basis));

  std::vector<ScaledVector> gens = report::example_set(1).realizations();
  gens.push_back(roots::root_r());
  EXPECT_TRUE(lattice_equal(gens, bases.lambda_basis));
}

TEST(LatticeEqual, EquivalenceRelation) {
  const auto& bases = roots::lambda_bases();
  std::vector<ScaledVector> lambda_gens = bases.L_basis;
  lambda_gens.push_back(roots::alpha());
  EXPECT_TRUE(lattice_equal(bases.lambda_basis, bases.lambda_basis));
  EXPECT_TRUE(lattice_equal(lambda_gens, bases.lambda_basis));
  EXPECT_TRUE(lattice_equal(bases.lambda_basis, lambda_gens));
  EXPECT_FALSE(lattice_equal(bases.dual_basis, lambda_gens));
}

TEST(GramDet, KnownDiscriminants) {
  const auto& bases = roots::lambda_bases();
  EXPECT_EQ(gram_det(bases.lambda_basis), make_rational(2));
  EXPECT_EQ(gram_det(a9_basis()), make_rational(10));
  EXPECT_EQ(gram_det(bases.L_basis), make_rational(200));
  EXPECT_EQ(gram_det(bases.dual_basis), make_rational(1, 2));
}

TEST(GramDet, DependentGeneratorsThrow) {
  std::vector<ScaledVector> gens = a9_basis();
  gens.push_back(gens[0] + gens[1]);
  EXPECT_THROW(gram_det(gens), std::domain_error);
}

TEST(GramDet, UnimodularInvariance) {
  std::mt19937_64 rng(test_seed());
  const auto& basis = roots::lambda_bases().lambda_basis;
  const IntMatrix b = IntMatrix::FromVectors(basis);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix changed = random_unimodular(rng, basis.size(), 30) * b;
    EXPECT_EQ(gram_det(changed.to_vectors()), make_rational(2));
  }
}

TEST(CharPoly, SmallExamples) {
  EXPECT_EQ(char_poly(IntMatrix(2, 2)), (IntPolynomial{0, 0, 1}));
  EXPECT_EQ(char_poly(IntMatrix{{0, 1}, {1, 0}}), (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(char_poly(IntMatrix{{2, 1}, {1, 2}}), (IntPolynomial{3, -4, 1}));
}

TEST(CharPoly, SeidelExampleSets) {
  const IntPolynomial a = char_poly(seidel::seidel_matrix(report::example_set(1)));
  const IntPolynomial b = char_poly(seidel::seidel_matrix(report::example_set(2)));
  const IntPolynomial p1 = seidel::printed_example_polynomial(1);
  const IntPolynomial p2 = seidel::printed_example_polynomial(2);
  EXPECT_TRUE((a == p1 && b == p2) || (a == p2 && b == p1));
}

TEST(CharPoly, CayleyHamilton) {
  std::mt19937_64 rng(test_seed());
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + t % 8;
    const IntMatrix m = random_matrix(rng, n, n, -9, 9);
    EXPECT_EQ(char_poly(m).evaluate(m), IntMatrix(n, n)) << m.to_string();
  }
}

TEST(CharPoly, DeterminantConsistency) {
  std::mt19937_64 rng(test_seed() + 1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 7;
    const IntMatrix m = random_matrix(rng, n, n, -5, 5);
    Int expected = determinant(m);
    if (n % 2 == 1) expected = -expected;
    EXPECT_EQ(char_poly(m).coefficient(0), expected);
  }
}

TEST(DistinctRootCount, Examples) {
  EXPECT_EQ(distinct_root_count(IntPolynomial{0, 0, 1}), 1u);
  EXPECT_EQ(distinct_root_count(IntPolynomial{-1, 0, 1}), 2u);
  EXPECT_EQ(distinct_root_count(seidel::printed_example_polynomial(1)), 6u);
  EXPECT_EQ(distinct_root_count(seidel::printed_example_polynomial(2)), 6u);
  EXPECT_THROW(distinct_root_count(IntPolynomial{}), std::domain_error);
}

TEST(Polynomial, StripRootAndGcd) {
  IntPolynomial p = IntPolynomial::LinearPower(Int(5), 3) * IntPolynomial{36, 17, 1};
  EXPECT_EQ(strip_root(p, Int(5)), 3u);
  EXPECT_EQ(p, (IntPolynomial{36, 17, 1}));
  EXPECT_EQ(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1}), (IntPolynomial{1, 1}));
  EXPECT_EQ(gcd(IntPolynomial{}, IntPolynomial{}), IntPolynomial{});
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(IntMatrix::Identity(5)), 5u);
  EXPECT_EQ(rank(IntMatrix(3, 3)), 0u);
}

TEST(ShortVectors, IdentityLattice) {
  const RationalMatrix id = {{make_rational(1), make_rational(0)}, {make_rational(0), make_rational(1)}};
  EXPECT_EQ(short_vectors(id, make_rational(1)).size(), 4u);
  EXPECT_EQ(short_vectors(id, make_rational(2)).size(), 8u);
}

TEST(ShortVectors, A9RootCount) {
  const RationalMatrix g = gram_matrix(a9_basis());
  EXPECT_EQ(short_vectors(g, make_rational(2)).size(), 90u);
}

}  // namespace
}  // namespace eql
