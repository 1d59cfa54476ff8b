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

// Check reports, bundled data and the end-to-end reproduction runs.

#ifndef EQLINES_REPORT_HPP_
#define EQLINES_REPORT_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eqlines/colorings.hpp"
#include "eqlines/x_vectors.hpp"
#include "json.hpp"

namespace eql::report {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

class ReproReport {
 public:
  // Passes iff the two strings are equal.
  void add(std::string name, std::string expected, std::string computed);
  // For checks that are not plain equalities (bounds, set comparisons).
  void add(std::string name, std::string expected, std::string computed, bool pass);
  // Free-form remark carried along with the checks.
  void add_note(std::string note);
  void append(const ReproReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool passed() const;

  // One JSON object per line: {"name", "expected", "computed", "pass"} for
  // checks, then {"note"} for remarks.
  std::string json_lines() const;
  std::string summary_table() const;

 private:
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

// Bundled data directory; the EQL_DATA_DIR environment variable overrides the
// location fixed at build time.
std::filesystem::path data_dir();

std::uint32_t crc32(std::string_view bytes);

using Triple = std::array<int, 3>;

struct AppendixSet {
  int which = 0;
  std::vector<Triple> triples;
};

// Whitespace-separated three-digit tokens "ijk"; the digit 0 stands for 10.
std::vector<Triple> parse_triples(std::string_view text);

// Reads data/appendix/I<which>.txt and checks it against CHECKSUMS.
AppendixSet load_appendix(int which);

// {V1(t) : t in triples} together with psi0.
xset::AesSet omega(const AppendixSet& a);

// Classes Y_i = {{j, k} : (i, j, k) in triples}.
colorings::ProperColoring appendix_coloring(const AppendixSet& a);

// The union of a V5 part and the X_1 set of a colouring; throws
// std::invalid_argument unless the result is an affine equiangular set.
xset::AesSet build_aes(const xset::AesSet& x5_part, const colorings::ProperColoring& y);

// The worked examples over round_robin(5):
//   1: psi0 with (H_1, ..., H_9, empty)
//   2: psi0 with (empty, H_1, ..., H_9)
//   3: psi0 with (H_1, H_8, H_9, empty, H_2, H_3, H_4, H_7, H_6, H_5)
std::vector<int> example_h_sequence(int which);
xset::AesSet example_set(int which);

struct ReproOptions {
  unsigned jobs = 1;
};

ReproReport reproduce_numbers(const ReproOptions& options = {});
ReproReport verify_appendix(int which);
ReproReport reproduce_examples();

}  // namespace eql::report

#endif  // EQLINES_REPORT_HPP_
