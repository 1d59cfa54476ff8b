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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eqlines/colorings.hpp"
#include "eqlines/exact.hpp"
#include "eqlines/permutation.hpp"
#include "eqlines/report.hpp"
#include "eqlines/root_lattices.hpp"
#include "eqlines/seidel.hpp"
#include "eqlines/symmetry.hpp"
#include "eqlines/x5_cliques.hpp"
#include "eqlines/x_vectors.hpp"
#include "test_support.hpp"

namespace {

using namespace eql;
using xset::AesSet;
using xset::XKind;
using xset::XLabel;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

void ac1(Outcome& o) {
  const auto& x = xset::enumerate_x();
  std::size_t v1 = 0, vm1 = 0, v5 = 0;
  std::vector<ScaledVector> vectors;
  for (const auto& l : x) {
    v1 += l.kind() == XKind::kV1;
    vm1 += l.kind() == XKind::kVm1;
    v5 += l.kind() == XKind::kV5;
    vectors.push_back(xset::realize(l));
  }
  std::sort(vectors.begin(), vectors.end());
  o.expect(v1 == 450 && vm1 == 450 && v5 == 252, "class sizes");
  o.expect(x.size() == 1152, "total");
  o.expect(vectors == roots::enum_dual_short_with_r(make_rational(3)), "equals dual short vectors");
  o.detail << "|X1|=" << v1 << " |X-1|=" << vm1 << " |X5|=" << v5 << " total=" << x.size();
}

void ac2(Outcome& o) {
  const auto& x = xset::enumerate_x();
  std::vector<ScaledVector> v;
  for (const auto& l : x) v.push_back(xset::realize(l));
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      ++pairs;
      if (xset::pair_value(x[a], x[b]) * 100 != scaled_dot(v[a], v[b])) ++mismatches;
    }
  }
  o.expect(pairs == 662976, "pair count");
  o.expect(mismatches == 0, "pair_value differs from dot");
  o.detail << pairs << " pairs, " << mismatches << " mismatches";
}

void ac3(Outcome& o) {
  const cliques::CliqueCensus census = cliques::enum_max_cliques();
  const cliques::OrbitResult orbit = cliques::s10_orbit(cliques::clique_of(cliques::psi0()));
  o.expect(census.cliques.size() == 151200, "clique count");
  o.expect(census.maximum_size == 12 && !census.larger_clique_found, "no 13-clique");
  o.expect(orbit.orbit == census.cliques, "orbit equals census");
  o.expect(orbit.stabilizer_order == 24, "stabilizer order");
  o.detail << census.cliques.size() << " maximum cliques of size " << census.maximum_size
           << ", larger found: " << (census.larger_clique_found ? "yes" : "no")
           << ", orbit " << orbit.orbit_size << ", stabilizer " << orbit.stabilizer_order.get_str();
}

void ac4(Outcome& o) {
  std::vector<ScaledVector> gens = cliques::psi0().realizations();
  gens.push_back(roots::root_r());
  const cliques::RootSystemType t = cliques::root_sublattice_type(gens);
  o.expect(t.recognized && t.to_string() == "A1+A3+A5", "type");
  o.expect(t.total_roots == 44, "root count");
  o.detail << t.to_string() << " with " << t.total_roots << " roots";
}

void ac5(Outcome& o) {
  const Int t10 = colorings::telephone(10);
  const Int m10 = colorings::count_matchings(10);
  const Int f6 = colorings::count_factorizations(6);
  const Int f8 = colorings::count_factorizations(8);
  const auto k4 = colorings::check_injection(2);
  const auto k6 = colorings::check_injection(3);
  o.expect(t10 == 9496 && m10 == t10, "T(10)");
  o.expect(f6 == 6, "K6 factorizations");
  o.expect(f8 == 6240, "K8 factorizations");
  o.expect(k4.inputs == 60 && k4.distinct_outputs == 60 && k4.all_valid, "K4 injection");
  o.expect(k6.inputs == 54720 && k6.distinct_outputs == 54720 && k6.all_valid, "K6 injection");
  o.detail << "T(10)=" << t10.get_str() << " matchings(K10)=" << m10.get_str()
           << " F(K6)=" << f6.get_str() << " F(K8)=" << f8.get_str() << " inject K4 "
           << k4.distinct_outputs << "/" << k4.inputs << " K6 " << k6.distinct_outputs << "/"
           << k6.inputs;
}

void ac6(Outcome& o) {
  const IntPolynomial p1 = seidel::printed_example_polynomial(1);
  const IntPolynomial p2 = seidel::printed_example_polynomial(2);
  const seidel::Analysis a = seidel::analyze(report::example_set(1));
  const seidel::Analysis b = seidel::analyze(report::example_set(2));
  const bool direct = a.charpoly == p1 && b.charpoly == p2;
  const bool swapped = a.charpoly == p2 && b.charpoly == p1;
  o.expect(direct || swapped, "polynomial set");
  for (const auto* an : {&a, &b}) {
    o.expect(an->mult5 == 39 && an->dimension == 18 && an->distinct_eigs == 6, "spectrum data");
  }
  o.detail << "mult5=" << a.mult5 << "/" << b.mult5 << " dim=" << a.dimension << "/"
           << b.dimension << " distinct=" << a.distinct_eigs << "/" << b.distinct_eigs;
  if (swapped) {
    o.detail << "; note: (H1..H9,empty) gives the second printed polynomial and"
                " (empty,H1..H9) the first";
  }
}

void ac7(Outcome& o) {
  const colorings::CountChain c = colorings::count_chain();
  o.expect(c.colorings_lower == Int("21502468915200"), "9! T(10) 6240");
  o.expect(c.aes_lower == Int("3251173299978240000"), "times 151200");
  o.expect(c.isometry_lower >= 246896, "isometry bound");
  o.detail << c.colorings_lower.get_str() << ", " << c.aes_lower.get_str() << ", floor/(10!)^2 = "
           << c.isometry_lower.get_str();
}

void ac8(Outcome& o) {
  std::vector<std::pair<std::string, AesSet>> sets{{"example 1", report::example_set(1)},
                                                   {"example 2", report::example_set(2)}};
  for (int w = 1; w <= 4; ++w) {
    sets.emplace_back("appendix " + std::to_string(w), report::omega(report::load_appendix(w)));
  }
  const auto& lambda = roots::lambda_bases().lambda_basis;
  for (const auto& [name, s] : sets) {
    const xset::MaximalityCertificate c = xset::verify_strong_maximality(s);
    std::vector<ScaledVector> gens = s.realizations();
    gens.push_back(roots::root_r());
    o.expect(c.verdict, name + " strongly maximal");
    o.expect(lattice_equal(gens, lambda), name + " generates Lambda");
  }
  const Rational m = roots::dual_min_outside_lambda_with_r();
  o.expect(m == make_rational(7, 2), "dual minimum");
  o.detail << sets.size() << " sets strongly maximal and generating; min outside Lambda = "
           << to_string(m);
}

void ac9(Outcome& o) {
  const sym::PermutationGroup aut_h = sym::aut_of_factorization(colorings::round_robin(5));
  const sym::PermutationGroup aut_i0 = sym::aut_of_i0();
  const Permutation h_elem = Permutation::FromCycles(10, "(1,8)(2,7)(3,6)(4,5)");
  const Permutation i0_elem = Permutation::FromCycles(10, "(1,2)(5,8)(6,9)(7,10)");
  const sym::AutElement sigma{i0_elem, h_elem, false};
  o.expect(aut_h.order() == 54 && aut_h.contains(h_elem), "Aut(H)");
  o.expect(aut_i0.order() == 24 && aut_i0.contains(i0_elem), "Aut(I0)");
  o.expect(sym::stabilizes(sigma, report::example_set(3), false), "stabilizer element");
  const ScaledVector r = roots::root_r();
  bool partner = true;
  for (const auto& x : xset::enumerate_x()) {
    partner = partner && sym::apply(sym::AutElement::Mu(), x) == x.partner() &&
              sym::apply(sym::AutElement::Mu(), xset::realize(x)) == r - xset::realize(x);
  }
  o.expect(partner, "mu is the partner map");
  o.detail << "|Aut(H)|=" << aut_h.order() << " |Aut(I0)|=" << aut_i0.order()
           << ", sigma fixes the third example, mu(u) = r - u on all of X";
}

void ac10(Outcome& o) {
  const std::uint64_t seed = eql::testing::test_seed();
  std::mt19937_64 rng(seed);

  o.expect(seidel::switching_invariance_check(report::example_set(1), 100, rng()),
           "switching invariance");

  const auto& x = xset::enumerate_x();
  bool action = true;
  for (int t = 0; t < 100; ++t) {
    const sym::AutElement g = sym::random_element(rng());
    const sym::AutElement h = sym::random_element(rng());
    const sym::AutElement gh = sym::compose(g, h);
    for (const auto& l : x) action = action && sym::apply(g, sym::apply(h, l)) == sym::apply(gh, l);
  }
  o.expect(action, "group action homomorphism");

  bool cayley = true;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 8;
    const IntMatrix m = eql::testing::random_matrix(rng, n, n, -9, 9);
    cayley = cayley && char_poly(m).evaluate(m) == IntMatrix(n, n);
  }
  o.expect(cayley, "Cayley-Hamilton");

  bool hnf_ok = true;
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 2 + t % 6;
    const IntMatrix m = eql::testing::random_matrix(rng, rows, 22, -20, 20);
    const IntMatrix h = hnf(m);
    const IntMatrix u = eql::testing::random_unimodular(rng, rows);
    hnf_ok = hnf_ok && hnf(h) == h && hnf(u * m) == h &&
             lattice_equal(m.to_vectors(), (u * m).to_vectors());
  }
  o.expect(hnf_ok, "HNF idempotence and invariance");
  o.detail << "seed " << seed << ": 100 switchings, 100 action pairs, 100 Cayley-Hamilton, 50 HNF";
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria{ac1, ac2, ac3, ac4, ac5,
                                                            ac6, ac7, ac8, ac9, ac10};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    all = all && o.pass;
    std::cout << "AC" << (i + 1) << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str()
              << " (" << ms << " ms)" << std::endl;
  }
  return all ? 0 : 1;
}
