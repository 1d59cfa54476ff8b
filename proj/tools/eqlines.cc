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

// Command-line front end.  Exit status: 0 when every check passes, 1 when a
// check fails, 2 on usage or input errors.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqlines/colorings.hpp"
#include "eqlines/report.hpp"
#include "eqlines/root_lattices.hpp"
#include "eqlines/seidel.hpp"
#include "eqlines/symmetry.hpp"
#include "eqlines/x5_cliques.hpp"
#include "eqlines/x_vectors.hpp"

namespace {

using eql::report::ReproReport;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out;
  unsigned jobs = 1;
  bool long_run = false;
};

void write_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw UsageError("cannot write " + g.out);
  file << text;
}

// JSON lines go to --out (or stdout); the summary table always goes to stdout.
int emit(const Globals& g, const ReproReport& r) {
  write_text(g, r.json_lines());
  std::cout << r.summary_table();
  return r.passed() ? kExitPass : kExitFail;
}

int emit_json(const Globals& g, const json& j) {
  write_text(g, j.dump(2) + "\n");
  return kExitPass;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

eql::xset::AesSet read_aes(const std::string& path) {
  try {
    return eql::xset::aes_from_json(read_json(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + text);
    }
  }
  return out;
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

// enumerate-x

int run_enumerate_x(const Globals& g) {
  using eql::xset::XKind;
  const auto& all = eql::xset::enumerate_x();
  std::size_t v5 = 0, v1 = 0, vm1 = 0;
  std::ostringstream lines;
  for (const auto& x : all) {
    v5 += x.kind() == XKind::kV5;
    v1 += x.kind() == XKind::kV1;
    vm1 += x.kind() == XKind::kVm1;
    lines << eql::xset::to_json(x).dump() << '\n';
  }
  std::vector<eql::ScaledVector> realized;
  for (const auto& x : all) realized.push_back(eql::xset::realize(x));
  std::sort(realized.begin(), realized.end());
  ReproReport r;
  r.add("|X_1|", "450", str(v1));
  r.add("|X_-1|", "450", str(vm1));
  r.add("|X_5|", "252", str(v5));
  r.add("|X|", "1152", str(all.size()));
  r.add("X equals dual shorts with (v,r)=1, norm<=3", "true",
        str(realized == eql::roots::enum_dual_short_with_r(eql::make_rational(3))));
  write_text(g, lines.str());
  std::cout << r.summary_table();
  return r.passed() ? kExitPass : kExitFail;
}

// coset-minima

int run_coset_minima(const Globals& g) {
  using namespace eql::roots;
  ReproReport r;
  for (int n : {1, 9}) {
    for (int m = 1; m <= n; ++m) {
      const eql::Rational norm = coset_min_norm({n, m});
      const auto reps = min_coset_reps({n, m});
      const auto all = enum_coset_vectors({n, m}, norm);
      r.add("A" + std::to_string(n) + " coset " + std::to_string(m) + " minimal vectors",
            str(reps.size()), str(all.size()));
      r.add_note("A" + std::to_string(n) + " coset " + std::to_string(m) + " minimum norm " +
                 norm.get_str());
    }
  }
  std::ostringstream pairs;
  for (auto [a, b] : dual_glue_pairs_with_r()) pairs << "(" << a << "," << b << ")";
  r.add("dual glue pairs with (v,r)=1", "(3,1)(5,5)(7,9)(9,3)(1,7)", pairs.str());
  r.add("min norm over dual minus Lambda with (v,r)=1", "7/2",
        dual_min_outside_lambda_with_r().get_str());
  return emit(g, r);
}

// dual-short

int run_dual_short(const Globals& g, const std::string& bound_text) {
  eql::Rational bound;
  try {
    bound = eql::Rational(bound_text);
    bound.canonicalize();
  } catch (const std::exception&) {
    throw UsageError("bad bound: " + bound_text);
  }
  if (bound < 0) throw UsageError("bound must be non-negative");
  const auto shorts = eql::roots::enum_dual_short_with_r(bound);
  json j = {{"bound", bound.get_str()}, {"count", shorts.size()}};
  std::size_t outside = 0, recognized = 0;
  for (const auto& v : shorts) {
    outside += !eql::roots::lambda_membership(v).has_value();
    recognized += eql::xset::recognize(v).has_value();
  }
  j["outside_lambda"] = outside;
  j["in_X"] = recognized;
  return emit_json(g, j);
}

// cliques

int run_cliques(const Globals& g, bool count, const std::string& dump, bool transitivity) {
  using namespace eql::cliques;
  const CliqueCensus census = enum_max_cliques(g.jobs);
  ReproReport r;
  if (count || (!transitivity && dump.empty())) {
    const ClassGraph& graph = class_graph();
    r.add("class graph vertices", "126", str(graph.size()));
    r.add("class graph edges", "6300", str(graph.edge_count()));
    r.add("maximum cliques", "151200", str(census.cliques.size()));
    r.add("no clique of size 13", "true", str(!census.larger_clique_found));
  }
  if (!dump.empty()) {
    json list = json::array();
    for (const auto& c : census.cliques) {
      json sets = json::array();
      for (auto v : c) sets.push_back(eql::xset::elements_of(class_graph().vertex(v)));
      list.push_back(sets);
    }
    std::ofstream file(dump);
    if (!file) throw UsageError("cannot write " + dump);
    file << list.dump() << '\n';
  }
  if (transitivity) {
    const OrbitResult orbit = s10_orbit(clique_of(psi0()));
    r.add("orbit of psi0 under S_10", "151200", str(orbit.orbit_size));
    r.add("stabilizer order", "24", orbit.stabilizer_order.get_str());
    r.add("orbit equals census", "true", str(orbit.orbit == census.cliques));
  }
  return emit(g, r);
}

// psi0

int run_psi0(const Globals& g, bool verify) {
  using namespace eql::cliques;
  const eql::xset::AesSet s = psi0();
  if (!verify) return emit_json(g, eql::xset::to_json(s));
  ReproReport r;
  r.add("formula matches printed list", "true", str(psi0_sets() == psi0_printed_sets()));
  r.add("size", "12", str(s.size()));
  r.add("is_aes", "true", str(eql::xset::is_aes(s)));
  r.add("(1,2)(5,8)(6,9)(7,10) preserves the sets", "true",
        str(act_on_clique(eql::Permutation::FromCycles(10, "(1,2)(5,8)(6,9)(7,10)"),
                          clique_of(s)) == clique_of(s)));
  std::vector<eql::ScaledVector> gens = s.realizations();
  gens.push_back(eql::roots::root_r());
  const RootSystemType t = root_sublattice_type(gens);
  r.add("root system of <psi0, r>", "A1+A3+A5", t.to_string());
  r.add("root count", "44", str(t.total_roots));
  return emit(g, r);
}

// colorings

int run_round_robin(const Globals& g, int n) {
  if (n < 1) throw UsageError("--n must be positive");
  const auto f = eql::colorings::round_robin(n);
  json factors = json::array();
  for (const auto& m : f.factors) {
    json edges = json::array();
    for (const auto& [a, b] : m.edges()) edges.push_back({a, b});
    factors.push_back(edges);
  }
  return emit_json(g, {{"vertices", f.vertices},
                       {"factors", factors},
                       {"valid", eql::colorings::is_one_factorization(f)}});
}

int run_count_matchings(const Globals& g, int v) {
  if (v < 0 || v > 12) throw UsageError("--v must lie in 0..12");
  ReproReport r;
  r.add("count_matchings(" + std::to_string(v) + ") = telephone",
        eql::colorings::telephone(v).get_str(), eql::colorings::count_matchings(v).get_str());
  return emit(g, r);
}

int run_count_factorizations(const Globals& g, int v) {
  if (v < 2 || v % 2 != 0 || v > 10) throw UsageError("--v must be even and in 2..10");
  if (v == 10 && !g.long_run) throw UsageError("K_10 takes hours; pass --long to run it");
  std::function<void(std::size_t, std::size_t)> progress;
  if (v == 10) {
    progress = [](std::size_t done, std::size_t total) {
      std::cerr << "branches finished: " << done << "/" << total << std::endl;
    };
  }
  const eql::Int count = eql::colorings::count_factorizations(v, g.jobs, progress);
  return emit_json(g, {{"vertices", v}, {"factorizations", count.get_str()}});
}

int run_inject_check(const Globals& g, const std::string& which) {
  int n = 0;
  std::string expected;
  if (which == "k4") {
    n = 2;
    expected = "60";
  } else if (which == "k6") {
    n = 3;
    expected = "54720";
  } else {
    throw UsageError("--check must be k4 or k6");
  }
  const auto rep = eql::colorings::check_injection(n);
  ReproReport r;
  r.add("inputs", expected, str(rep.inputs));
  r.add("distinct outputs", expected, str(rep.distinct_outputs));
  r.add("all outputs proper colourings", "true", str(rep.all_valid));
  return emit(g, r);
}

// build-aes

int run_build_aes(const Globals& g, const std::string& x5, const std::string& coloring_file,
                  const std::string& h_sequence) {
  using namespace eql;
  xset::AesSet x5_part;
  if (x5 == "psi0") {
    x5_part = cliques::psi0();
  } else {
    std::size_t index = 0;
    try {
      index = std::stoul(x5);
    } catch (const std::exception&) {
      throw UsageError("--x5 must be psi0 or a clique index");
    }
    const auto census = cliques::enum_max_cliques(g.jobs);
    if (index >= census.cliques.size()) throw UsageError("clique index out of range");
    x5_part = cliques::clique_to_aes(census.cliques[index]);
  }
  if (coloring_file.empty() == h_sequence.empty()) {
    throw UsageError("give exactly one of --coloring and --h-sequence");
  }
  colorings::ProperColoring y;
  try {
    y = coloring_file.empty() ? colorings::coloring_from_h_sequence(parse_int_list(h_sequence))
                              : colorings::coloring_from_json(read_json(coloring_file));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const xset::AesSet s = report::build_aes(x5_part, y);
  return emit_json(g, xset::to_json(s));
}

// verify

int run_verify(const Globals& g, const std::string& aes_file, bool strong) {
  const eql::xset::AesSet s = read_aes(aes_file);
  ReproReport r;
  const bool aes = eql::xset::is_aes(s);
  r.add("is_aes", "true", str(aes));
  r.add_note("size " + str(s.size()));
  if (aes && strong) {
    const auto cert = eql::xset::verify_strong_maximality(s);
    r.add("strongly_maximal", "true", str(cert.verdict));
    r.add_note("certificate " + eql::xset::to_json(cert).dump());
  }
  if (aes) r.add_note("generates_lambda " + str(eql::xset::verify_generates_lambda(s)));
  return emit(g, r);
}

// seidel

int run_seidel(const Globals& g, const std::string& aes_file, bool analyze_flag, int example) {
  using namespace eql;
  if (example != 0) {
    if (example < 1 || example > 2) throw UsageError("--example must be 1 or 2");
    const xset::AesSet s = report::example_set(example);
    json j = seidel::to_json(seidel::analyze(s));
    j["h_sequence"] = report::example_h_sequence(example);
    j["size"] = s.size();
    return emit_json(g, j);
  }
  if (aes_file.empty() || !analyze_flag) throw UsageError("use --aes FILE --analyze or --example N");
  const xset::AesSet s = read_aes(aes_file);
  if (!xset::is_aes(s)) throw UsageError(aes_file + " is not an affine equiangular set");
  json j = seidel::to_json(seidel::analyze(s));
  j["size"] = s.size();
  return emit_json(g, j);
}

// orbits

int run_orbits(const Globals& g, bool stabilizer_check, const std::string& aes_file,
               const std::string& sigma1, const std::string& sigma2, bool negated,
               bool up_to_switching, bool aut_h, bool aut_i0) {
  using namespace eql;
  ReproReport r;
  if (stabilizer_check) {
    if (aes_file.empty()) throw UsageError("--stabilizer-check needs --aes");
    const xset::AesSet s = read_aes(aes_file);
    if (!xset::is_aes(s)) throw UsageError(aes_file + " is not an affine equiangular set");
    sym::AutElement el;
    try {
      el = {Permutation::FromCycles(10, sigma1), Permutation::FromCycles(10, sigma2), negated};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    r.add("stabilizes", "true", str(sym::stabilizes(el, s, up_to_switching)));
  }
  if (aut_h) {
    const auto group = sym::aut_of_factorization(colorings::round_robin(5));
    r.add("aut(H).order", "54", str(group.order()));
    r.add("aut(H) contains (1,8)(2,7)(3,6)(4,5)", "true",
          str(group.contains(Permutation::FromCycles(10, "(1,8)(2,7)(3,6)(4,5)"))));
    r.add("aut(H) contains (1,2,3,4,5,6,7,8,9)", "true",
          str(group.contains(Permutation::FromCycles(10, "(1,2,3,4,5,6,7,8,9)"))));
  }
  if (aut_i0) {
    const auto group = sym::aut_of_i0();
    r.add("aut(I0).order", "24", str(group.order()));
    r.add("aut(I0) contains (1,2)(5,8)(6,9)(7,10)", "true",
          str(group.contains(Permutation::FromCycles(10, "(1,2)(5,8)(6,9)(7,10)"))));
  }
  if (r.checks().empty()) throw UsageError("choose --stabilizer-check, --aut-h or --aut-i0");
  return emit(g, r);
}

// reproduce

int run_reproduce(const Globals& g, bool all, bool numbers, int appendix, bool examples) {
  ReproReport r;
  if (!all && !numbers && appendix == 0 && !examples) all = true;
  eql::report::ReproOptions options;
  options.jobs = g.jobs;
  if (all || numbers) r.append(eql::report::reproduce_numbers(options));
  if (all || examples) r.append(eql::report::reproduce_examples());
  if (appendix != 0) {
    if (appendix < 1 || appendix > 4) throw UsageError("--appendix must be 1..4");
    r.append(eql::report::verify_appendix(appendix));
  } else if (all) {
    for (int w = 1; w <= 4; ++w) r.append(eql::report::verify_appendix(w));
  }
  return emit(g, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on equiangular lines from the lattice A9+A9+A1"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "Write the main output to FILE");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_flag("--long", g.long_run, "Allow the multi-hour K_10 factorization count");

  int result = kExitPass;

  auto* enumerate = app.add_subcommand("enumerate-x", "List the 1152 vectors of X");
  enumerate->callback([&] { result = run_enumerate_x(g); });

  auto* coset = app.add_subcommand("coset-minima", "Minimal coset vectors of A_1 and A_9");
  coset->callback([&] { result = run_coset_minima(g); });

  std::string bound = "3";
  auto* dual = app.add_subcommand("dual-short", "Short dual vectors with (v,r) = 1");
  dual->add_option("--bound", bound, "Norm bound, a rational such as 3 or 7/2");
  dual->callback([&] { result = run_dual_short(g, bound); });

  bool count = false, transitivity = false;
  std::string dump;
  auto* cl = app.add_subcommand("cliques", "Maximum cliques of the switching-class graph");
  cl->add_flag("--count", count, "Count maximum cliques");
  cl->add_option("--dump", dump, "Write all cliques as JSON");
  cl->add_flag("--transitivity", transitivity, "Check the S_10 orbit of psi0");
  cl->callback([&] { result = run_cliques(g, count, dump, transitivity); });

  bool verify_psi0 = false;
  auto* ps = app.add_subcommand("psi0", "The maximum set psi0 in X_5");
  ps->add_flag("--verify", verify_psi0, "Run the checks instead of printing the set");
  ps->callback([&] { result = run_psi0(g, verify_psi0); });

  auto* col = app.add_subcommand("colorings", "Matchings, factorizations, colourings");
  col->require_subcommand(1);
  int rr_n = 5, cm_v = 10, cf_v = 8;
  std::string inject_which;
  auto* rr = col->add_subcommand("round-robin", "Circle-method 1-factorization of K_2n");
  rr->add_option("--n", rr_n, "Half the number of vertices");
  rr->callback([&] { result = run_round_robin(g, rr_n); });
  auto* cm = col->add_subcommand("count-matchings", "Count matchings of K_v");
  cm->add_option("--v", cm_v, "Vertices");
  cm->callback([&] { result = run_count_matchings(g, cm_v); });
  auto* cf = col->add_subcommand("count-factorizations", "Count 1-factorizations of K_v");
  cf->add_option("--v", cf_v, "Vertices");
  cf->callback([&] { result = run_count_factorizations(g, cf_v); });
  auto* inj = col->add_subcommand("inject", "Exhaustive injectivity check");
  inj->add_option("--check", inject_which, "k4 or k6")->required();
  inj->callback([&] { result = run_inject_check(g, inject_which); });

  std::string x5 = "psi0", coloring_file, h_sequence;
  auto* build = app.add_subcommand("build-aes", "Combine an X_5 part and a colouring");
  build->add_option("--x5", x5, "psi0 or the index of a maximum clique");
  build->add_option("--coloring", coloring_file, "Colouring JSON file");
  build->add_option("--h-sequence", h_sequence, "Ten H indices, 0 for the empty class");
  build->callback([&] { result = run_build_aes(g, x5, coloring_file, h_sequence); });

  std::string aes_file;
  bool strong = false;
  auto* ver = app.add_subcommand("verify", "Check an affine equiangular set");
  ver->add_option("--aes", aes_file, "AES JSON file")->required();
  ver->add_flag("--strong", strong, "Also decide strong maximality");
  ver->callback([&] { result = run_verify(g, aes_file, strong); });

  bool analyze = false;
  int example = 0;
  auto* sei = app.add_subcommand("seidel", "Seidel matrix spectrum data");
  sei->add_option("--aes", aes_file, "AES JSON file");
  sei->add_flag("--analyze", analyze, "Characteristic polynomial and dimension");
  sei->add_option("--example", example, "Built-in example 1 or 2");
  sei->callback([&] { result = run_seidel(g, aes_file, analyze, example); });

  bool stab = false, negated = false, up_to_switching = false, aut_h = false, aut_i0 = false;
  std::string sigma1 = "()", sigma2 = "()";
  auto* orb = app.add_subcommand("orbits", "Stabilizers and automorphism groups");
  orb->add_flag("--stabilizer-check", stab, "Test whether an element fixes a set");
  orb->add_option("--aes", aes_file, "AES JSON file");
  orb->add_option("--sigma1", sigma1, "Permutation of the first block, cycle notation");
  orb->add_option("--sigma2", sigma2, "Permutation of the second block, cycle notation");
  orb->add_flag("--negated", negated, "Use the branch -(sigma1, sigma2, -id)");
  orb->add_flag("--up-to-switching", up_to_switching, "Compare switching classes");
  orb->add_flag("--aut-h", aut_h, "Automorphisms of the round-robin factorization");
  orb->add_flag("--aut-i0", aut_i0, "Automorphisms of the psi0 index sets");
  orb->callback([&] {
    result = run_orbits(g, stab, aes_file, sigma1, sigma2, negated, up_to_switching, aut_h,
                        aut_i0);
  });

  bool all = false, numbers = false, examples = false;
  int appendix = 0;
  auto* rep = app.add_subcommand("reproduce", "Recompute the published numbers");
  rep->add_flag("--all", all, "Everything below");
  rep->add_flag("--numbers", numbers, "Counts and the counting chain");
  rep->add_flag("--examples", examples, "Worked examples and automorphism groups");
  rep->add_option("--appendix", appendix, "One appendix set, 1..4");
  rep->callback([&] { result = run_reproduce(g, all, numbers, appendix, examples); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return result;
}
