// One PASS/FAIL line per acceptance criterion. argv[1] is the uacalc binary.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "ua/cohomology.hpp"
#include "ua/laws.hpp"
#include "ua/oracle.hpp"

using namespace ua;

namespace {

struct Case {
  const char* k;
  const char* q;
  bool inversion;

  GroupAction action() const {
    return inversion ? inversion_action(catalog_group(k), catalog_group(q)) : trivial_action(catalog_group(k), catalog_group(q));
  }
  Extension extension() const { return semidirect_extension(catalog_group(k), catalog_group(q), action()); }
  AffineDatum datum() const { return extract_datum(extension(), group_malcev_term()).datum; }
};

const Case kCases[] = {{"Z2", "Z2", false}, {"Z2", "Z2xZ2", false}, {"Z3", "Z2", true}, {"Z2", "Z3", false}};

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const Extension& catalog_ext(const std::string& name) {
  static const auto cat = extension_catalog();
  for (const auto& ne : cat)
    if (ne.name == name) return ne.ext;
  throw std::runtime_error("missing " + name);
}

AffineDatum catalog_datum(const std::string& name) {
  return extract_datum(catalog_ext(name), group_malcev_term()).datum;
}

bool round_trip() {
  for (const auto& ne : extension_catalog()) {
    Extraction ex = extract_datum(ne.ext, group_malcev_term());
    if (!find_isomorphism(reconstruct(ex.datum, ex.cocycle).B, ne.ext.B)) return false;
  }
  return true;
}

bool cohomology_vs_oracle() {
  for (const auto& c : kCases) {
    ClassicalH2 cl = classical_h2(catalog_group(c.k), catalog_group(c.q), c.action());
    CohomologyResult h = h2(c.datum(), group_axioms(), identify_group);
    if (h.order() != cl.reps.size() || h.invariant_factors() != cl.invariant_factors) return false;
    if (sorted(h.types) != sorted(cl.types)) return false;
  }
  CohomologyResult z = h2(catalog_datum("Z4/Z2"), group_axioms(), identify_group);
  return z.order() == 2 && sorted(z.types) == std::vector<std::string>{"Z2xZ2", "Z4"};
}

bool split_test() {
  return find_retraction(catalog_ext("Z2xZ2/Z2")).has_value() && !find_retraction(catalog_ext("Z4/Z2")).has_value();
}

bool coboundaries_are_cocycles() {
  auto exp6 = group_axioms();
  exp6.push_back({parse_term("(mul (mul (mul x0 x0) x0) (mul (mul x0 x0) x0))"), parse_term("e")});
  const std::vector<std::vector<Equation>> sigmas = {group_axioms(), abelian_group_axioms(), exp6};
  for (const auto& c : kCases) {
    AffineDatum d = c.datum();
    CoboundaryGroup b = coboundary_group(d);
    int containing = 0;
    for (const auto& sigma : sigmas) {
      if (!check_action_compatible(d, sigma).holds) continue;
      ++containing;
      auto z = enumerate_cocycles(d, sigma);
      for (const auto& G : b.b2.elements)
        if (!check_cocycle(d, G, sigma).holds || !std::binary_search(z.begin(), z.end(), G)) return false;
    }
    if (containing < 2) return false;
  }
  return true;
}

bool equivalence_vs_gamma() {
  for (const auto& c : kCases) {
    AffineDatum d = c.datum();
    auto z = enumerate_cocycles(d, group_axioms());
    std::vector<Extension> rec;
    for (const auto& T : z) rec.push_back(reconstruct(d, T));
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j)
        if (are_equivalent(d, z[i], z[j]) != find_stabilized_isomorphism(rec[i], rec[j]).has_value()) return false;
  }
  return true;
}

bool stabilizers_vs_derivations() {
  for (const auto& c : kCases) {
    Extension e = c.extension();
    Report r = verify_stabilizer_correspondence(e);
    if (!r.holds || stabilizers(e).size() != derivations(c.datum()).size()) return false;
  }
  return true;
}

bool commutator_laws() {
  const Term m = group_malcev_term();
  std::vector<FiniteAlgebra> family;
  std::vector<std::vector<Congruence>> thetas;
  for (const auto& g : group_catalog()) {
    family.push_back(g);
    thetas.push_back(all_congruences(g));
  }
  if (!verify_difference_term(family, m, thetas, DifferenceScope::difference).holds) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const FiniteAlgebra& g = family[i];
    for (const auto& a : thetas[i]) {
      if (!check_delta_one_abelian(g, a).holds) return false;
      if (!is_abelian(g, a)) continue;
      for (const auto& b : thetas[i]) {
        if (!check_delta_same_top(g, a, b).holds || !check_delta_descriptions(g, a, b, m).holds) return false;
        if (a.leq(b) && tc_commutator(g, b, a).is_equality() && !check_delta_meet(g, a, b).holds) return false;
      }
    }
  }
  std::mt19937 rng(0);
  for (const auto& b : family) {
    if (!is_abelian(b, Partition::total(b.size()))) continue;
    for (const auto& q : family) {
      if (b.size() * q.size() > 16) continue;
      std::vector<Table> T;
      std::uniform_int_distribution<int> pick(0, b.size() - 1);
      for (int f = 0; f < q.num_ops(); ++f) {
        Table t(checked_pow(q.size(), q.arity(f)));
        for (auto& v : t) v = pick(rng);
        T.push_back(std::move(t));
      }
      if (!check_tensor_right_central(b, q, m, 0, T).holds) return false;
    }
  }
  return true;
}

bool central_decomposition() {
  for (const auto& g : group_catalog()) {
    ExtensionDecomposition dec = decompose_extension(g, center_congruence(g), group_malcev_term());
    if (!dec.report.holds || !find_isomorphism(g, dec.product)) return false;
  }
  return true;
}

bool nilpotence() {
  for (const char* name : {"D4", "Q8"}) {
    const FiniteAlgebra& g = catalog_group(name);
    NilpotentDecomposition dec = decompose_nilpotent(g, 2, group_malcev_term());
    if (!dec.report.holds || dec.factors.size() != 2) return false;
    for (const auto& f : dec.factors)
      if (!is_abelian(f, Partition::total(f.size()))) return false;
    if (!find_isomorphism(g, dec.product)) return false;
    if (!check_product_nilpotent(dec.product, 2).holds || check_product_nilpotent(dec.product, 1).holds) return false;
  }
  return true;
}

bool central_reconstructions() {
  std::vector<AffineDatum> data;
  for (const auto& c : kCases) data.push_back(c.datum());
  for (const auto& ne : extension_catalog()) data.push_back(extract_datum(ne.ext, group_malcev_term()).datum);
  for (const auto& d : data) {
    if (!trivial_action_check(d).holds) continue;
    CohomologyResult h = h2(d, group_axioms());
    for (int rep : h.reps) {
      Extension e = reconstruct(d, h.z2.elements[rep]);
      if (!is_right_central(e.B, e.beta)) return false;
    }
  }
  return !trivial_action_check(Case{"Z3", "Z2", true}.datum()).holds;
}

bool abelian_subgroup() {
  Report r = abelian_extension_subgroup(catalog_datum("Z4/Z2"), group_axioms(), abelian_group_axioms());
  return r.holds && !r.details["ext_classes"].empty();
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return status == -1 ? std::string() : out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "uacalc";
  struct Criterion {
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"round-trip of the catalog extensions", 10, round_trip},
      {"H2 against classical group cohomology", 60, cohomology_vs_oracle},
      {"split test by retraction", 1, split_test},
      {"coboundaries are cocycles", 0, coboundaries_are_cocycles},
      {"coboundary equivalence against gamma search", 0, equivalence_vs_gamma},
      {"stabilizers against derivations", 0, stabilizers_vs_derivations},
      {"commutator laws on difference-term instances", 30, commutator_laws},
      {"central extensions as tensor products", 0, central_decomposition},
      {"two-step nilpotent decompositions", 0, nilpotence},
      {"trivial actions and central reconstructions", 0, central_reconstructions},
      {"abelian extensions form a subgroup of H2", 0, abelian_subgroup},
      {"invariant suite JSON is deterministic",
       0,
       [&] {
         const std::string cmd = "'" + cli + "' verify-paper --format json";
         std::string a = run_capture(cmd), b = run_capture(cmd);
         return !a.empty() && a == b && a.find("\"claims\"") != std::string::npos;
       }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit == 0 || secs < c.limit;
    bool pass = ok && in_time;
    failed += !pass;
    std::printf("%s %2zu %s (%.2fs%s%s)\n", pass ? "PASS" : "FAIL", i + 1, c.name, secs,
                in_time ? "" : ", over time limit", error.empty() ? "" : (", " + error).c_str());
  }
  return failed == 0 ? 0 : 1;
}
