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

#include "eqlines/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "eqlines/x5_cliques.hpp"

namespace eql::sym {

AutElement compose(const AutElement& g, const AutElement& h) {
  return {g.sigma1 * h.sigma1, g.sigma2 * h.sigma2, g.negated != h.negated};
}

AutElement inverse(const AutElement& g) {
  return {g.sigma1.inverse(), g.sigma2.inverse(), g.negated};
}

AutElement random_element(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto random_perm = [&rng] {
    std::vector<int> images(10);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::FromImages(std::move(images));
  };
  AutElement g;
  g.sigma1 = random_perm();
  g.sigma2 = random_perm();
  g.negated = std::bernoulli_distribution(0.5)(rng);
  return g;
}

xset::XLabel apply(const AutElement& g, const xset::XLabel& x) {
  xset::XLabel y = x;
  switch (x.kind()) {
    case xset::XKind::kV5:
      y = xset::XLabel::V5(static_cast<xset::SubsetMask>(g.sigma1.apply_mask(x.set())));
      break;
    case xset::XKind::kV1:
      y = xset::XLabel::V1(g.sigma1(x.i()), g.sigma2(x.j()), g.sigma2(x.k()));
      break;
    case xset::XKind::kVm1:
      y = xset::XLabel::Vm1(g.sigma1(x.i()), g.sigma2(x.j()), g.sigma2(x.k()));
      break;
  }
  return g.negated ? y.partner() : y;
}

ScaledVector apply(const AutElement& g, const ScaledVector& v) {
  ScaledVector out;
  for (int x = 1; x <= 10; ++x) {
    out[g.sigma1(x) - 1] = v[x - 1];
    out[10 + g.sigma2(x) - 1] = v[10 + x - 1];
  }
  out[20] = v[20];
  out[21] = v[21];
  if (g.negated) {
    for (int c = 0; c < 20; ++c) out[c] = -out[c];
  }
  return out;
}

xset::AesSet act_on_aes(const AutElement& g, const xset::AesSet& s) {
  std::vector<xset::XLabel> out;
  out.reserve(s.size());
  for (const auto& x : s.labels()) out.push_back(apply(g, x));
  return xset::AesSet(std::move(out));
}

bool stabilizes(const AutElement& g, const xset::AesSet& s, bool up_to_switching) {
  const xset::AesSet image = act_on_aes(g, s);
  return up_to_switching ? xset::switching_equivalent(image, s) : image == s;
}

PermutationGroup::PermutationGroup(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

// All sigma in S_10 with sigma(set) in `family` for every member, where
// `act` maps a member under the image array.
template <typename Member, typename Act>
PermutationGroup brute_force_stabilizer(std::vector<Member> family, Act act) {
  std::sort(family.begin(), family.end());
  std::vector<int> images(10);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> found;
  do {
    bool ok = true;
    for (const Member& m : family) {
      if (!std::binary_search(family.begin(), family.end(), act(images, m))) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(Permutation::FromImages(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermutationGroup(std::move(found));
}

// Edges of K_10 indexed 0..44; a matching is a bitmask over them.
int edge_bit(int a, int b) {
  if (a > b) std::swap(a, b);
  return (a - 1) * (20 - a) / 2 + (b - a - 1);
}

}  // namespace

PermutationGroup aut_of_factorization(const colorings::OneFactorization& f) {
  if (f.vertices != 10) throw std::invalid_argument("aut_of_factorization: need K_10");
  std::vector<std::uint64_t> family;
  for (const auto& m : f.factors) {
    std::uint64_t mask = 0;
    for (const auto& [a, b] : m.edges()) mask |= std::uint64_t{1} << edge_bit(a, b);
    family.push_back(mask);
  }
  return brute_force_stabilizer(family, [](const std::vector<int>& img, std::uint64_t m) {
    std::uint64_t out = 0;
    for (int a = 1; a <= 10; ++a) {
      for (int b = a + 1; b <= 10; ++b) {
        if (m & (std::uint64_t{1} << edge_bit(a, b))) {
          out |= std::uint64_t{1} << edge_bit(img[a - 1], img[b - 1]);
        }
      }
    }
    return out;
  });
}

PermutationGroup aut_of_i0() {
  const auto sets = cliques::psi0_sets();
  std::vector<std::uint16_t> family(sets.begin(), sets.end());
  return brute_force_stabilizer(family, [](const std::vector<int>& img, std::uint16_t m) {
    std::uint16_t out = 0;
    for (int x = 1; x <= 10; ++x) {
      if (m & (1U << (x - 1))) out |= static_cast<std::uint16_t>(1U << (img[x - 1] - 1));
    }
    return out;
  });
}

}  // namespace eql::sym
