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

#include "eqlines/colorings.hpp"
#include "eqlines/x_vectors.hpp"
#include "test_support.hpp"

namespace eql::colorings {
namespace {

Matching matching(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.first, e.second);
  return Matching(std::move(edges));
}

TEST(Telephone, Values) {
  const std::vector<long> expected{1, 1, 2, 4, 10, 26};
  for (int n = 0; n < 6; ++n) EXPECT_EQ(telephone(n), expected[n]);
  EXPECT_EQ(telephone(10), 9496);
}

TEST(CountMatchings, AgreesWithTelephone) {
  EXPECT_EQ(count_matchings(0), 1);
  EXPECT_EQ(count_matchings(4), 10);
  EXPECT_EQ(count_matchings(10), 9496);
  for (int v = 0; v <= 10; v += 2) EXPECT_EQ(count_matchings(v), telephone(v));
  EXPECT_THROW(count_matchings(14), std::invalid_argument);
}

TEST(Matching, RejectsSharedVertices) {
  EXPECT_THROW(matching({{1, 2}, {2, 3}}), std::invalid_argument);
  const Matching m = matching({{3, 4}, {2, 1}});
  EXPECT_TRUE(m.contains({1, 2}));
  EXPECT_EQ(m.edges().front(), Edge(1, 2));
}

TEST(RoundRobin, ExplicitFactors) {
  const OneFactorization f = round_robin(5);
  ASSERT_EQ(f.factors.size(), 9u);
  EXPECT_EQ(f.factors[0], matching({{10, 1}, {9, 2}, {8, 3}, {7, 4}, {6, 5}}));
  EXPECT_EQ(f.factors[8], matching({{10, 9}, {8, 1}, {7, 2}, {6, 3}, {5, 4}}));
}

TEST(RoundRobin, ValidForSmallOrders) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_one_factorization(round_robin(n))) << n;
  EXPECT_EQ(round_robin(2).factors.size(), 3u);
}

TEST(InjectF, EmptyMatching) {
  const OneFactorization f = round_robin(5);
  const ProperColoring y = inject_f(f, Matching{});
  ASSERT_EQ(y.classes.size(), 10u);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(y.classes[i], f.factors[i]);
  EXPECT_TRUE(y.classes[9].empty());
  EXPECT_TRUE(is_proper_coloring(y));
}

TEST(InjectF, ExhaustiveSmallOrders) {
  const InjectivityReport k4 = check_injection(2);
  EXPECT_EQ(k4.inputs, 60u);
  EXPECT_EQ(k4.distinct_outputs, 60u);
  EXPECT_TRUE(k4.all_valid);
  const InjectivityReport k6 = check_injection(3);
  EXPECT_EQ(k6.inputs, 54720u);
  EXPECT_EQ(k6.distinct_outputs, 54720u);
  EXPECT_TRUE(k6.all_valid);
}

TEST(InjectF, RandomK10OutputsAreProper) {
  std::mt19937_64 rng(testing::test_seed());
  const auto matchings = all_matchings(10);
  std::uniform_int_distribution<std::size_t> pick(0, matchings.size() - 1);
  const OneFactorization f = round_robin(5);
  for (int t = 0; t < 200; ++t) EXPECT_TRUE(is_proper_coloring(inject_f(f, matchings[pick(rng)])));
}

TEST(CountFactorizations, SmallOrders) {
  EXPECT_EQ(count_factorizations(2), 1);
  EXPECT_EQ(count_factorizations(4), 1);
  EXPECT_EQ(count_factorizations(6), 6);
  EXPECT_EQ(count_factorizations(8), 6240);
  EXPECT_EQ(count_factorizations(8, 2), 6240);
}

TEST(CountFactorizations, EnumerationAgrees) {
  const auto k6 = enumerate_factorizations(6);
  EXPECT_EQ(k6.size(), 6u);
  for (const auto& f : k6) EXPECT_TRUE(is_one_factorization(f));
}

// The printed list lines up with K_2, K_4, K_6, K_8 rather than n = 0, 1, 2, 3.
TEST(CountFactorizations, PrintedListAgainstComputedCounts) {
  const auto printed = printed_factorization_list();
  ASSERT_EQ(printed.size(), 6u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(printed[i], count_factorizations(2 * (i + 1)));
}

TEST(ColoringToAes, RoundRobinExample) {
  const ProperColoring y = coloring_from_h_sequence({1, 2, 3, 4, 5, 6, 7, 8, 9, 0});
  const xset::AesSet s = coloring_to_aes(y);
  EXPECT_EQ(s.size(), 45u);
  EXPECT_TRUE(xset::is_aes(s));
  EXPECT_EQ(aes_to_coloring(s), y);
}

TEST(ColoringToAes, RandomRoundTrips) {
  const std::uint64_t seed = testing::test_seed();
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ProperColoring y = random_coloring(seed + t);
    ASSERT_TRUE(is_proper_coloring(y));
    const xset::AesSet s = coloring_to_aes(y);
    EXPECT_EQ(s.size(), 45u);
    EXPECT_TRUE(xset::is_aes(s));
    EXPECT_EQ(aes_to_coloring(s), y);
    EXPECT_EQ(coloring_from_json(to_json(y)), y);
  }
}

TEST(ColoringToAes, RejectsOtherLabels) {
  EXPECT_THROW(aes_to_coloring(xset::AesSet({xset::XLabel::V5({1, 2, 3, 4, 5})})),
               std::invalid_argument);
  EXPECT_THROW(aes_to_coloring(xset::AesSet({xset::XLabel::Vm1(1, 2, 3)})), std::invalid_argument);
}

TEST(CountChain, Values) {
  const CountChain c = count_chain();
  EXPECT_EQ(c.factorial9, 362880);
  EXPECT_EQ(c.telephone10, 9496);
  EXPECT_EQ(c.factorizations5, 6240);
  EXPECT_EQ(c.colorings_lower, Int("21502468915200"));
  EXPECT_EQ(c.clique_count, 151200);
  EXPECT_EQ(c.aes_lower, Int("3251173299978240000"));
  EXPECT_EQ(c.group_order_squared, Int("13168189440000"));
  EXPECT_GE(c.isometry_lower, 246896);
}

}  // namespace
}  // namespace eql::colorings
