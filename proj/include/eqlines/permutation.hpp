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

#ifndef EQLINES_PERMUTATION_HPP_
#define EQLINES_PERMUTATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eql {

// A permutation of {1, ..., n}.  Composition follows function notation:
// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  // images[x - 1] = image of x; throws std::invalid_argument unless bijective.
  static Permutation FromImages(std::vector<int> images);
  // Cycle notation such as "(1,2)(5,8)" or "()" for the identity.
  static Permutation FromCycles(int n, std::string_view cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  // Image of a subset of [n] encoded as a bitmask (bit x-1 for x).
  std::uint32_t apply_mask(std::uint32_t mask) const;

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace eql

#endif  // EQLINES_PERMUTATION_HPP_
