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

#include "eqlines/x_vectors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "eqlines/root_lattices.hpp"

namespace eql::xset {

SubsetMask mask_of(std::span<const int> elements) {
  SubsetMask m = 0;
  for (int e : elements) {
    if (e < 1 || e > 10) throw std::invalid_argument("subset element out of [10]");
    const SubsetMask bit = static_cast<SubsetMask>(1U << (e - 1));
    if (m & bit) throw std::invalid_argument("repeated subset element");
    m |= bit;
  }
  return m;
}

std::vector<int> elements_of(SubsetMask mask) {
  std::vector<int> out;
  for (int e = 1; e <= 10; ++e) {
    if (mask & (1U << (e - 1))) out.push_back(e);
  }
  return out;
}

namespace {

void check_index(int v) {
  if (v < 1 || v > 10) throw std::invalid_argument("label index out of [10]");
}

}  // namespace

XLabel XLabel::V1(int i, int j, int k) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (j == k) throw std::invalid_argument("V1 label needs j != k");
  if (j > k) std::swap(j, k);
  return XLabel(XKind::kV1, i, j, k, 0);
}

XLabel XLabel::Vm1(int i, int j, int k) {
  XLabel x = V1(i, j, k);
  x.kind_ = XKind::kVm1;
  return x;
}

XLabel XLabel::V5(SubsetMask set) {
  if ((set & ~kFullMask) != 0 || std::popcount(set) != 5) {
    throw std::invalid_argument("V5 label needs a 5-subset of [10]");
  }
  return XLabel(XKind::kV5, 0, 0, 0, set);
}

XLabel XLabel::V5(std::initializer_list<int> set) {
  const std::vector<int> e(set);
  return V5(mask_of(e));
}

XLabel XLabel::partner() const {
  switch (kind_) {
    case XKind::kV1:
      return Vm1(i_, j_, k_);
    case XKind::kVm1:
      return V1(i_, j_, k_);
    case XKind::kV5:
      return V5(static_cast<SubsetMask>(kFullMask & ~set_));
  }
  throw std::logic_error("unreachable");
}

std::string XLabel::to_string() const {
  std::ostringstream out;
  if (kind_ == XKind::kV5) {
    out << "V5({";
    const auto e = elements_of(set_);
    for (std::size_t n = 0; n < e.size(); ++n) out << (n ? "," : "") << e[n];
    out << "})";
  } else {
    out << (kind_ == XKind::kV1 ? "V1(" : "Vm1(") << int(i_) << "," << int(j_)
        << "," << int(k_) << ")";
  }
  return out.str();
}

std::strong_ordering operator<=>(const XLabel& a, const XLabel& b) {
  const bool a5 = a.kind_ == XKind::kV5;
  const bool b5 = b.kind_ == XKind::kV5;
  if (a5 != b5) return a5 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a5) {
    const auto ea = elements_of(a.set_);
    const auto eb = elements_of(b.set_);
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(),
                                                  eb.begin(), eb.end());
  }
  if (auto c = a.i_ <=> b.i_; c != 0) return c;
  if (auto c = a.j_ <=> b.j_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return a.kind_ <=> b.kind_;
}

ScaledVector realize(const XLabel& x) {
  ScaledVector v;
  v[20] = 5;
  v[21] = -5;
  if (x.kind() == XKind::kV5) {
    for (int e = 1; e <= 10; ++e) v[e - 1] = (x.set() & (1U << (e - 1))) ? -5 : 5;
    return v;
  }
  for (int e = 0; e < 10; ++e) {
    v[e] = 1;
    v[10 + e] = 2;
  }
  v[x.i() - 1] -= 10;
  v[10 + x.j() - 1] -= 10;
  v[10 + x.k() - 1] -= 10;
  if (x.kind() == XKind::kVm1) return roots::root_r() - v;
  return v;
}

namespace {

std::optional<XLabel> recognize_v1(const ScaledVector& v) {
  if (v[20] != 5 || v[21] != -5) return std::nullopt;
  int i = 0;
  for (int e = 0; e < 10; ++e) {
    if (v[e] == -9 && i == 0) {
      i = e + 1;
    } else if (v[e] != 1) {
      return std::nullopt;
    }
  }
  std::vector<int> low;
  for (int e = 0; e < 10; ++e) {
    if (v[10 + e] == -8) {
      low.push_back(e + 1);
    } else if (v[10 + e] != 2) {
      return std::nullopt;
    }
  }
  if (i == 0 || low.size() != 2) return std::nullopt;
  return XLabel::V1(i, low[0], low[1]);
}

}  // namespace

std::optional<XLabel> recognize(const ScaledVector& v) {
  if (auto x = recognize_v1(v)) return x;
  if (auto x = recognize_v1(roots::root_r() - v)) return x->partner();
  if (v[20] != 5 || v[21] != -5) return std::nullopt;
  SubsetMask set = 0;
  for (int e = 0; e < 10; ++e) {
    if (v[10 + e] != 0) return std::nullopt;
    if (v[e] == -5) {
      set |= static_cast<SubsetMask>(1U << e);
    } else if (v[e] != 5) {
      return std::nullopt;
    }
  }
  if (std::popcount(set) != 5) return std::nullopt;
  return XLabel::V5(set);
}

namespace {

int same_sign_value(const XLabel& a, const XLabel& b) {
  int v = a.i() == b.i() ? 1 : 0;
  for (int x : {a.j(), a.k()}) {
    if (x == b.j() || x == b.k()) ++v;
  }
  return v;
}

}  // namespace

int pair_value(const XLabel& a, const XLabel& b) {
  const XKind ka = a.kind();
  const XKind kb = b.kind();
  if (ka == XKind::kV5 && kb == XKind::kV5) {
    return std::popcount(static_cast<unsigned>(a.set() & b.set())) - 2;
  }
  if (ka == kb) return same_sign_value(a, b);
  // Exactly one side is Vm1: (r - u, w) = 1 - (u, w).
  if (ka == XKind::kVm1) return 1 - pair_value(a.partner(), b);
  if (kb == XKind::kVm1) return 1 - pair_value(a, b.partner());
  // V1 against V5.
  const XLabel& one = ka == XKind::kV1 ? a : b;
  const XLabel& five = ka == XKind::kV1 ? b : a;
  return (five.set() & (1U << (one.i() - 1))) ? 1 : 0;
}

const std::vector<XLabel>& enumerate_x() {
  static const std::vector<XLabel> all = [] {
    std::vector<XLabel> out;
    for (SubsetMask m = 0; m <= kFullMask; ++m) {
      if (std::popcount(m) == 5) out.push_back(XLabel::V5(m));
    }
    for (int i = 1; i <= 10; ++i) {
      for (int j = 1; j <= 10; ++j) {
        for (int k = j + 1; k <= 10; ++k) {
          out.push_back(XLabel::V1(i, j, k));
          out.push_back(XLabel::Vm1(i, j, k));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

AesSet::AesSet(std::vector<XLabel> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

bool AesSet::contains(const XLabel& x) const {
  return std::binary_search(labels_.begin(), labels_.end(), x);
}

std::vector<ScaledVector> AesSet::realizations() const {
  std::vector<ScaledVector> out;
  out.reserve(labels_.size());
  for (const auto& x : labels_) out.push_back(realize(x));
  return out;
}

AesSet set_union(const AesSet& a, const AesSet& b) {
  std::vector<XLabel> all = a.labels();
  all.insert(all.end(), b.labels().begin(), b.labels().end());
  return AesSet(std::move(all));
}

bool is_aes(const AesSet& s) {
  const auto& l = s.labels();
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      const int v = pair_value(l[a], l[b]);
      if (v != 0 && v != 1) return false;
    }
  }
  return true;
}

AesSet switch_set(const AesSet& s, const AesSet& subset) {
  std::vector<XLabel> out;
  out.reserve(s.size());
  for (const auto& x : subset.labels()) {
    if (!s.contains(x)) throw std::invalid_argument("switch subset not contained in set");
  }
  for (const auto& x : s.labels()) {
    out.push_back(subset.contains(x) ? x.partner() : x);
  }
  return AesSet(std::move(out));
}

AesSet canonical_switch_form(const AesSet& s) {
  std::vector<XLabel> out;
  out.reserve(s.size());
  for (const auto& x : s.labels()) {
    const bool flip = x.kind() == XKind::kVm1 ||
                      (x.kind() == XKind::kV5 && (x.set() & 1U) == 0);
    out.push_back(flip ? x.partner() : x);
  }
  return AesSet(std::move(out));
}

bool switching_equivalent(const AesSet& a, const AesSet& b) {
  return canonical_switch_form(a) == canonical_switch_form(b);
}

namespace {

std::vector<ScaledVector> generators_with_root(const AesSet& s) {
  std::vector<ScaledVector> gens = s.realizations();
  gens.push_back(roots::root_r());
  return gens;
}

const std::vector<ScaledVector>& dual_shorts_at_three() {
  static const std::vector<ScaledVector> shorts =
      roots::enum_dual_short_with_r(make_rational(3));
  return shorts;
}

bool admissible_against(const ScaledVector& v, std::span<const ScaledVector> members) {
  for (const auto& u : members) {
    const std::int64_t d = scaled_dot(v, u);
    if (d != 0 && d != kScale * kScale) return false;
  }
  return true;
}

std::vector<Rational> descale(const ScaledVector& v) {
  std::vector<Rational> out;
  for (int c = 0; c < kDim; ++c) out.push_back(make_rational(v[c], kScale));
  return out;
}

// Search in the dual of the actual span M = <s, r>: enumerate the
// dual vectors of norm <= 3 through the dual Gram matrix G^{-1}.
void search_span_dual(const AesSet& s, MaximalityCertificate& cert) {
  const auto gens = generators_with_root(s);
  const auto members = s.realizations();
  const auto basis = hnf(IntMatrix::FromVectors(gens)).to_vectors();
  const RationalMatrix g = gram_matrix(basis);
  const RationalMatrix g_inv = inverse(g);
  const auto coeffs = short_vectors(g_inv, make_rational(3));
  const std::size_t k = basis.size();
  const ScaledVector r = roots::root_r();
  for (const auto& c : coeffs) {
    // v = sum_a c_a b*_a with dual basis b*_a = sum_b (G^{-1})_{ab} b_b.
    std::vector<Rational> y(k);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t a = 0; a < k; ++a) y[b] += Rational(c[a]) * g_inv[a][b];
    }
    std::vector<Rational> coords(kDim);
    for (std::size_t b = 0; b < k; ++b) {
      for (int col = 0; col < kDim; ++col) {
        coords[col] += y[b] * make_rational(basis[b][col], kScale);
      }
    }
    auto inner = [&](const ScaledVector& u) {
      Rational acc = 0;
      for (int col = 0; col < kDim; ++col) {
        acc += coords[col] * make_rational(u[col], kScale);
      }
      return acc;
    };
    if (inner(r) != 1) continue;
    ++cert.dual_shorts_examined;
    ++cert.extension_candidates_examined;
    bool ok = true;
    for (const auto& u : members) {
      const Rational p = inner(u);
      if (p != 0 && p != 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      cert.verdict = false;
      cert.extension_vector = coords;
      return;
    }
  }
  cert.verdict = true;
}

}  // namespace

bool verify_generates_lambda(const AesSet& s) {
  const auto gens = generators_with_root(s);
  return lattice_equal(gens, roots::lambda_bases().lambda_basis);
}

MaximalityCertificate verify_strong_maximality(const AesSet& s) {
  if (!is_aes(s)) throw std::invalid_argument("verify_strong_maximality: not an AES");
  MaximalityCertificate cert;
  cert.generates_lambda = verify_generates_lambda(s);
  if (!cert.generates_lambda) {
    cert.used_span_dual = true;
    search_span_dual(s, cert);
    return cert;
  }
  // The span is Lambda, so candidates are the vectors of Lambda* of norm <= 3
  // with (v, r) = 1.
  const auto& shorts = dual_shorts_at_three();
  auto members = s.realizations();
  std::sort(members.begin(), members.end());
  cert.dual_shorts_examined = shorts.size();
  cert.verdict = true;
  for (const auto& v : shorts) {
    if (std::binary_search(members.begin(), members.end(), v)) continue;
    ++cert.extension_candidates_examined;
    if (admissible_against(v, members)) {
      cert.verdict = false;
      cert.extension_vector = descale(v);
      cert.extension_label = recognize(v);
      break;
    }
  }
  return cert;
}

nlohmann::json to_json(const XLabel& x) {
  switch (x.kind()) {
    case XKind::kV5:
      return {{"kind", "v5"}, {"set", elements_of(x.set())}};
    case XKind::kV1:
      return {{"kind", "v1"}, {"i", x.i()}, {"j", x.j()}, {"k", x.k()}};
    case XKind::kVm1:
      return {{"kind", "vm1"}, {"i", x.i()}, {"j", x.j()}, {"k", x.k()}};
  }
  throw std::logic_error("unreachable");
}

XLabel label_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "v5") {
    return XLabel::V5(mask_of(j.at("set").get<std::vector<int>>()));
  }
  const int i = j.at("i").get<int>();
  const int jj = j.at("j").get<int>();
  const int k = j.at("k").get<int>();
  if (kind == "v1") return XLabel::V1(i, jj, k);
  if (kind == "vm1") return XLabel::Vm1(i, jj, k);
  throw std::invalid_argument("unknown vector kind: " + kind);
}

nlohmann::json to_json(const AesSet& s) {
  nlohmann::json vectors = nlohmann::json::array();
  for (const auto& x : s.labels()) vectors.push_back(to_json(x));
  return {{"root", "r"}, {"vectors", vectors}};
}

AesSet aes_from_json(const nlohmann::json& j) {
  if (j.contains("root") && j.at("root") != "r") {
    throw std::invalid_argument("only the switching root \"r\" is supported");
  }
  std::vector<XLabel> labels;
  for (const auto& v : j.at("vectors")) labels.push_back(label_from_json(v));
  const std::size_t n = labels.size();
  AesSet s(std::move(labels));
  if (s.size() != n) throw std::invalid_argument("duplicate vectors in AES file");
  return s;
}

nlohmann::json to_json(const MaximalityCertificate& c) {
  nlohmann::json j = {{"verdict", c.verdict},
                      {"generates_lambda", c.generates_lambda},
                      {"dual_shorts_examined", c.dual_shorts_examined},
                      {"extension_candidates_examined", c.extension_candidates_examined},
                      {"used_span_dual", c.used_span_dual}};
  if (c.extension_vector) {
    std::vector<std::string> coords;
    for (const auto& q : *c.extension_vector) coords.push_back(q.get_str());
    j["extension_vector"] = coords;
  }
  if (c.extension_label) j["extension_label"] = to_json(*c.extension_label);
  return j;
}

}  // namespace eql::xset
