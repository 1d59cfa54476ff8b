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
#include <sstream>
#include <stdexcept>
#include <string>

#include "eqlines/colorings.hpp"
#include "eqlines/report.hpp"
#include "eqlines/x5_cliques.hpp"
#include "test_support.hpp"

namespace eql::report {
namespace {

TEST(ReproReport, PassesOnExactEquality) {
  ReproReport r;
  r.add("same", "151200", "151200");
  EXPECT_TRUE(r.passed());
  r.add("different", "6240", "1225566720");
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.checks().back().pass);
  r.add_note("remark");
  EXPECT_EQ(r.notes().size(), 1u);
}

TEST(ReproReport, JsonLinesAndSummary) {
  ReproReport r;
  r.add("a", "1", "1");
  r.add("b", ">= 2", "3", true);
  r.add_note("n");
  std::istringstream in(r.json_lines());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    if (lines < 2) {
      EXPECT_TRUE(j.contains("name"));
      EXPECT_TRUE(j["pass"].get<bool>());
    } else {
      EXPECT_EQ(j["note"], "n");
    }
    ++lines;
  }
  EXPECT_EQ(lines, 3);
  EXPECT_NE(r.summary_table().find("2/2 checks passed"), std::string::npos);
}

TEST(Data, Crc32CheckValue) {
  EXPECT_EQ(crc32("123456789"), 0xCBF43926u);
}

TEST(Data, ParseTriples) {
  const auto t = parse_triples("123\n450 789\n");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], (Triple{1, 2, 3}));
  EXPECT_EQ(t[1], (Triple{4, 5, 10}));
  EXPECT_EQ(t[2], (Triple{7, 8, 9}));
  EXPECT_THROW(parse_triples("12"), std::invalid_argument);
  EXPECT_THROW(parse_triples("1a3"), std::invalid_argument);
}

TEST(Appendix, SetsLoadAndDecompose) {
  for (int which = 1; which <= 4; ++which) {
    const AppendixSet a = load_appendix(which);
    EXPECT_EQ(a.triples.size(), 45u);
    EXPECT_TRUE(colorings::is_proper_coloring(appendix_coloring(a)));
    const xset::AesSet s = omega(a);
    EXPECT_EQ(s.size(), 57u);
    EXPECT_TRUE(xset::is_aes(s));
  }
  EXPECT_THROW(load_appendix(5), std::invalid_argument);
}

TEST(Appendix, FirstSetVerifies) {
  const ReproReport r = verify_appendix(1);
  EXPECT_TRUE(r.passed()) << r.summary_table();
}

TEST(BuildAes, Examples) {
  const xset::AesSet psi0 = cliques::psi0();
  EXPECT_EQ(build_aes(psi0, colorings::coloring_from_h_sequence(example_h_sequence(1))),
            example_set(1));
  EXPECT_EQ(build_aes(psi0, colorings::coloring_from_h_sequence(example_h_sequence(2))),
            example_set(2));
  EXPECT_EQ(example_set(1).size(), 57u);
  const xset::AesSet bad({xset::XLabel::V5({1, 2, 3, 4, 5}), xset::XLabel::V5({1, 2, 3, 4, 6})});
  EXPECT_THROW(build_aes(bad, colorings::coloring_from_h_sequence(example_h_sequence(1))),
               std::invalid_argument);
}

TEST(BuildAes, RandomCliqueAndColoring) {
  std::mt19937_64 rng(testing::test_seed());
  const auto census = cliques::s10_orbit(cliques::clique_of(cliques::psi0()));
  std::uniform_int_distribution<std::size_t> pick(0, census.orbit.size() - 1);
  for (int t = 0; t < 20; ++t) {
    const xset::AesSet x5 = cliques::clique_to_aes(census.orbit[pick(rng)]);
    const xset::AesSet s = build_aes(x5, colorings::random_coloring(rng()));
    EXPECT_EQ(s.size(), 57u);
    EXPECT_TRUE(xset::is_aes(s));
  }
}

TEST(Reproduce, Examples) {
  const ReproReport r = reproduce_examples();
  EXPECT_TRUE(r.passed()) << r.summary_table();
}

TEST(Reproduce, Numbers) {
  const ReproReport r = reproduce_numbers();
  EXPECT_TRUE(r.passed()) << r.summary_table();
}

}  // namespace
}  // namespace eql::report
