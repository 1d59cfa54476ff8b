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

#include "eqlines/report.hpp"
#include "eqlines/seidel.hpp"
#include "eqlines/symmetry.hpp"
#include "eqlines/x5_cliques.hpp"
#include "test_support.hpp"

namespace eql::seidel {
namespace {

using xset::AesSet;
using xset::XLabel;

TEST(Lines, NormsAndAngles) {
  const LineSystem lines = lines_from_aes(report::example_set(1));
  ASSERT_EQ(lines.vectors.size(), 57u);
  for (std::size_t a = 0; a < lines.vectors.size(); ++a) {
    EXPECT_EQ(scaled_dot(lines.vectors[a], lines.vectors[a]), 1000);
    for (std::size_t b = a + 1; b < lines.vectors.size(); ++b) {
      const auto d = scaled_dot(lines.vectors[a], lines.vectors[b]);
      EXPECT_TRUE(d == 200 || d == -200);
    }
  }
  EXPECT_EQ(line_gram_rank(lines), 18u);
}

TEST(Lines, RejectNonAes) {
  EXPECT_THROW(lines_from_aes(AesSet({XLabel::V1(1, 2, 3), XLabel::V1(1, 2, 4)})),
               std::invalid_argument);
}

TEST(SeidelMatrix, Shape) {
  const IntMatrix s = seidel_matrix(report::example_set(1));
  ASSERT_EQ(s.rows(), 57u);
  for (std::size_t a = 0; a < s.rows(); ++a) {
    EXPECT_EQ(s(a, a), 0);
    for (std::size_t b = 0; b < s.cols(); ++b) {
      EXPECT_EQ(s(a, b), s(b, a));
      if (a != b) {
        EXPECT_TRUE(s(a, b) == 1 || s(a, b) == -1);
      }
    }
  }
}

// psi0 with (H_1, ..., H_9, empty) produces the second printed polynomial and
// psi0 with (empty, H_1, ..., H_9) the first; the pair of spectra matches.
TEST(SeidelMatrix, ExampleSpectraAssignmentInterchanged) {
  const IntPolynomial a = char_poly(seidel_matrix(report::example_set(1)));
  const IntPolynomial b = char_poly(seidel_matrix(report::example_set(2)));
  EXPECT_EQ(a, printed_example_polynomial(2));
  EXPECT_EQ(b, printed_example_polynomial(1));
}

TEST(Analyze, ExampleSets) {
  for (int which : {1, 2}) {
    const Analysis an = analyze(report::example_set(which));
    EXPECT_EQ(an.mult5, 39u);
    EXPECT_EQ(an.dimension, 18u);
    EXPECT_EQ(an.distinct_eigs, 6u);
  }
}

TEST(Analyze, SmallSets) {
  EXPECT_LE(analyze(cliques::psi0()).dimension, 9u);
  const Analysis single = analyze(AesSet({XLabel::V1(1, 2, 3)}));
  EXPECT_EQ(single.charpoly, (IntPolynomial{0, 1}));
  EXPECT_EQ(single.dimension, 1u);
}

TEST(Analyze, TraceIsZero) {
  for (int which : {1, 2, 3}) {
    const AesSet s = report::example_set(which);
    const IntPolynomial p = analyze(s).charpoly;
    EXPECT_EQ(p.coefficient(s.size() - 1), 0);
  }
  for (int which = 1; which <= 4; ++which) {
    const AesSet s = report::omega(report::load_appendix(which));
    const Analysis an = analyze(s);
    EXPECT_EQ(an.charpoly.coefficient(s.size() - 1), 0);
    EXPECT_EQ(an.mult5, 39u);
    EXPECT_EQ(an.dimension, 18u);
  }
}

TEST(Factor, PrintedPolynomials) {
  const Factored f1 = factor_integer_roots(printed_example_polynomial(1), 57);
  EXPECT_EQ(f1.to_string(), "(x-5)^39(x+9)^2(x+11)^11(x+13)^3(x^2+17x+36)");
  const Factored f2 = factor_integer_roots(printed_example_polynomial(2), 57);
  EXPECT_EQ(f2.to_string(), "(x-5)^39(x+9)(x+11)^13(x+13)^2(x^2+17x+32)");
  for (const Factored* f : {&f1, &f2}) {
    std::size_t degree = static_cast<std::size_t>(f->residual.degree());
    for (const auto& [root, mult] : f->roots) degree += mult;
    EXPECT_EQ(degree, 57u);
  }
}

TEST(SwitchingInvariance, FullAndRandomSwitches) {
  const AesSet s = report::example_set(1);
  const IntPolynomial p = analyze(s).charpoly;
  EXPECT_EQ(analyze(xset::switch_set(s, s)).charpoly, p);
  EXPECT_TRUE(switching_invariance_check(s, 100, testing::test_seed()));
}

TEST(SwitchingInvariance, SingletonOnSmallSet) {
  const AesSet s({XLabel::V1(1, 2, 3), XLabel::V1(1, 4, 5), XLabel::V1(2, 1, 3)});
  ASSERT_TRUE(xset::is_aes(s));
  const AesSet switched = xset::switch_set(s, AesSet({XLabel::V1(1, 4, 5)}));
  EXPECT_EQ(analyze(switched).charpoly, analyze(s).charpoly);
}

TEST(IsometryInvariance, RandomGroupElements) {
  std::mt19937_64 rng(testing::test_seed());
  const AesSet s = report::example_set(2);
  const IntPolynomial p = analyze(s).charpoly;
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(analyze(sym::act_on_aes(sym::random_element(rng()), s)).charpoly, p);
  }
}

TEST(Json, AnalysisFields) {
  const nlohmann::json j = to_json(analyze(report::example_set(2)));
  EXPECT_EQ(j["charpoly"], "(x-5)^39(x+9)^2(x+11)^11(x+13)^3(x^2+17x+36)");
  EXPECT_EQ(j["mult5"], 39);
  EXPECT_EQ(j["dimension"], 18);
  EXPECT_EQ(j["distinct_eigs"], 6);
  EXPECT_EQ(j["coefficients"].size(), 58u);
}

}  // namespace
}  // namespace eql::seidel
