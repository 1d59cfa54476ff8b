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

#include "eqlines/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eql {

Permutation::Permutation(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int y : images) {
    if (y < 1 || y > n || seen[y]) throw std::invalid_argument("not a permutation");
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::FromCycles(int n, std::string_view cycles) {
  Permutation p(n);
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_space();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos >= cycles.size()) throw std::invalid_argument("unterminated cycle");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      if (cycles[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos]))) {
        throw std::invalid_argument("unexpected character in cycle notation");
      }
      int x = 0;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos]))) {
        x = x * 10 + (cycles[pos] - '0');
        ++pos;
      }
      if (x < 1 || x > n) throw std::invalid_argument("cycle entry out of range");
      if (used[x]) throw std::invalid_argument("cycles are not disjoint");
      used[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.images_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return p;
}

std::uint32_t Permutation::apply_mask(std::uint32_t mask) const {
  std::uint32_t out = 0;
  for (int x = 1; x <= degree(); ++x) {
    if (mask & (1U << (x - 1))) out |= 1U << (images_[x - 1] - 1);
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int x = 1; x <= degree(); ++x) p.images_[images_[x - 1] - 1] = x;
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x) {
    if (images_[x - 1] != x) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree() + 1, false);
  for (int x = 1; x <= degree(); ++x) {
    if (seen[x] || images_[x - 1] == x) continue;
    out << '(';
    for (int y = x; !seen[y]; y = images_[y - 1]) {
      if (y != x) out << ',';
      out << y;
      seen[y] = true;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  Permutation p(a.degree());
  for (int x = 1; x <= a.degree(); ++x) p.images_[x - 1] = a(b(x));
  return p;
}

}  // namespace eql
