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

// The 1152 norm-3 vectors of Lambda with inner product 1 against r, their
// combinatorial labels, and affine equiangular sets built from them.
//
// Labels (indices 1-based, [10] = {1..10}):
//   V1(i, j, k)  = (1/10 1 - e_i, 2/10 1 - e_j - e_k, alpha_1),  j < k
//   Vm1(i, j, k) = r - V1(i, j, k)
//   V5(I)        = (1/2 1 - sum_{i in I} e_i, 0, alpha_1),       |I| = 5

#ifndef EQLINES_X_VECTORS_HPP_
#define EQLINES_X_VECTORS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqlines/exact.hpp"
#include "json.hpp"

namespace eql::xset {

enum class XKind : std::uint8_t { kV5 = 0, kV1 = 1, kVm1 = 2 };

// Subsets of [10] are bitmasks: bit (i-1) set iff i is a member.
using SubsetMask = std::uint16_t;
inline constexpr SubsetMask kFullMask = 0x3FF;

SubsetMask mask_of(std::span<const int> elements);
std::vector<int> elements_of(SubsetMask mask);

class XLabel {
 public:
  // Throw std::invalid_argument on malformed input; j and k are sorted.
  static XLabel V1(int i, int j, int k);
  static XLabel Vm1(int i, int j, int k);
  static XLabel V5(SubsetMask set);
  static XLabel V5(std::initializer_list<int> set);

  XKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  SubsetMask set() const { return set_; }

  // The label of r - x.
  XLabel partner() const;

  std::string to_string() const;

  friend bool operator==(const XLabel&, const XLabel&) = default;
  // V5 labels first (by sorted element list), then V1/Vm1 by (i, j, k), V1
  // before Vm1.
  friend std::strong_ordering operator<=>(const XLabel& a, const XLabel& b);

 private:
  XLabel(XKind kind, int i, int j, int k, SubsetMask set)
      : kind_(kind), i_(i), j_(j), k_(k), set_(set) {}

  XKind kind_;
  std::uint8_t i_ = 0, j_ = 0, k_ = 0;
  SubsetMask set_ = 0;
};

ScaledVector realize(const XLabel& x);

// Reads a label back from coordinates; nothing if v is not in X.
std::optional<XLabel> recognize(const ScaledVector& v);

// Inner product by the combinatorial formulas.
int pair_value(const XLabel& a, const XLabel& b);

// All of X: 252 V5, 450 V1, 450 Vm1 labels, sorted.
const std::vector<XLabel>& enumerate_x();

// A set of X labels with the fixed switching root r, kept sorted and
// duplicate free.
class AesSet {
 public:
  AesSet() = default;
  explicit AesSet(std::vector<XLabel> labels);

  const std::vector<XLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool contains(const XLabel& x) const;

  std::vector<ScaledVector> realizations() const;

  friend bool operator==(const AesSet&, const AesSet&) = default;

 private:
  std::vector<XLabel> labels_;
};

AesSet set_union(const AesSet& a, const AesSet& b);

// All pairwise values lie in {0, 1}.
bool is_aes(const AesSet& s);

// Replaces every member of `subset` by its partner.  Members of `subset`
// that are not in `s` are rejected.
AesSet switch_set(const AesSet& s, const AesSet& subset);

// Switching representative: Vm1 -> V1, V5(I) normalized so that 1 is in I.
AesSet canonical_switch_form(const AesSet& s);

bool switching_equivalent(const AesSet& a, const AesSet& b);

// The span of s together with r equals Lambda.
bool verify_generates_lambda(const AesSet& s);

struct MaximalityCertificate {
  bool generates_lambda = false;
  // Number of vectors v of the dual with (v, v) <= 3 and (v, r) = 1 that were
  // examined (all of them lie in X when the span is Lambda).
  std::size_t dual_shorts_examined = 0;
  std::size_t extension_candidates_examined = 0;
  bool verdict = false;
  // Set when the span is a proper sublattice of Lambda and the search ran in
  // the dual of the actual span.
  bool used_span_dual = false;
  std::optional<XLabel> extension_label;
  // Descaled coordinates of an extension vector, when one exists.
  std::optional<std::vector<Rational>> extension_vector;
};

// Decides whether some v in the dual of <s, r> has (v, v) <= 3, (v, r) = 1
// and (v, u) in {0, 1} for all u in s.  Throws std::invalid_argument if s is
// not an affine equiangular set.
MaximalityCertificate verify_strong_maximality(const AesSet& s);

// JSON schema: {"root":"r","vectors":[{"kind":"v1","i":1,"j":2,"k":3},
// {"kind":"vm1",...},{"kind":"v5","set":[1,2,3,4,5]}]}.
nlohmann::json to_json(const XLabel& x);
XLabel label_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AesSet& s);
AesSet aes_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MaximalityCertificate& c);

}  // namespace eql::xset

#endif  // EQLINES_X_VECTORS_HPP_
