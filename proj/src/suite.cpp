#include "ua/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "ua/cohomology.hpp"
#include "ua/laws.hpp"
#include "ua/oracle.hpp"

namespace ua {

namespace {

struct GroupCase {
  const char* k;
  const char* q;
  bool inversion;

  std::string name() const { return std::string(k) + (inversion ? " <-inv " : " <-triv ") + q; }
  GroupAction action() const {
    return inversion ? inversion_action(catalog_group(k), catalog_group(q)) : trivial_action(catalog_group(k), catalog_group(q));
  }
  Extension extension() const { return semidirect_extension(catalog_group(k), catalog_group(q), action()); }
  AffineDatum datum() const { return extract_datum(extension(), group_malcev_term()).datum; }
};

const std::vector<GroupCase>& oracle_cases() {
  static const std::vector<GroupCase> cases = {
      {"Z2", "Z2", false}, {"Z2", "Z2xZ2", false}, {"Z3", "Z2", true}, {"Z2", "Z3", false}};
  return cases;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Extraction catalog_extraction(const std::string& name) {
  for (const auto& ne : extension_catalog())
    if (ne.name == name) return extract_datum(ne.ext, group_malcev_term());
  throw InputError("no catalog extension " + name);
}

// x^12 = e holds in every group of exponent dividing 12
std::vector<Equation> exponent12_groups() {
  auto sigma = group_axioms();
  Term x3 = parse_term("(mul (mul x0 x0) x0)");
  Term x6 = Term::apply("mul", {x3, x3});
  sigma.push_back({Term::apply("mul", {x6, x6}), parse_term("e")});
  return sigma;
}

using ClaimFn = std::function<void(ClaimResult&, const SuiteOptions&)>;

struct Claim {
  std::string id;
  std::string text;
  ClaimFn run;
};

void fail(ClaimResult& r, Json why) {
  if (r.holds) r.details["failure"] = std::move(why);
  r.holds = false;
}

void round_trip(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  for (const auto& ne : extension_catalog()) {
    Extraction ex = extract_datum(ne.ext, group_malcev_term());
    Extension back = reconstruct(ex.datum, ex.cocycle);
    bool iso = find_isomorphism(back.B, ne.ext.B, o.seed).has_value();
    bool realized = check_realization(ne.ext, ex.datum).holds;
    bool valid = all_hold(validate_datum(ex.datum));
    rows.push_back(Json{{"extension", ne.name}, {"valid_datum", valid}, {"isomorphic", iso}, {"realizes", realized}});
    if (!iso || !realized || !valid) fail(r, ne.name);
  }
  r.details["extensions"] = rows;
}

void h2_oracle(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  for (const auto& c : oracle_cases()) {
    ClassicalH2 cl = classical_h2(catalog_group(c.k), catalog_group(c.q), c.action(), o.cap);
    CohomologyResult h = h2(c.datum(), group_axioms(), identify_group, o.cap);
    bool ok = h.invariant_factors() == cl.invariant_factors && sorted(h.types) == sorted(cl.types);
    rows.push_back(Json{{"case", c.name()}, {"h2", h.invariant_factors()}, {"classical", cl.invariant_factors},
                        {"types", sorted(h.types)}, {"classical_types", sorted(cl.types)}});
    if (!ok) fail(r, c.name());
  }
  CohomologyResult z = h2(catalog_extraction("Z4/Z2").datum, group_axioms(), identify_group, o.cap);
  bool ok = z.order() == 2 && sorted(z.types) == std::vector<std::string>{"Z2xZ2", "Z4"};
  rows.push_back(Json{{"case", "Z4/Z2 datum"}, {"h2", z.invariant_factors()}, {"types", sorted(z.types)}});
  if (!ok) fail(r, "Z4/Z2 datum");
  r.details["cases"] = rows;
}

void split_test(ClaimResult& r, const SuiteOptions&) {
  Json rows = Json::array();
  for (auto [name, expect] : {std::pair{"Z2xZ2/Z2", true}, std::pair{"Z4/Z2", false}}) {
    Extension e;
    for (const auto& ne : extension_catalog())
      if (ne.name == name) e = ne.ext;
    bool found = find_retraction(e).has_value();
    bool direct = find_retraction_direct(e).has_value();
    rows.push_back(Json{{"extension", name}, {"retraction", found}, {"direct_search", direct}});
    if (found != expect || direct != expect) fail(r, name);
  }
  r.details["extensions"] = rows;
}

void coboundaries(ClaimResult& r, const SuiteOptions& o) {
  const std::vector<std::pair<std::string, std::vector<Equation>>> sigmas = {
      {"groups", group_axioms()}, {"abelian groups", abelian_group_axioms()}, {"groups of exponent 12", exponent12_groups()}};
  Json rows = Json::array();
  for (const auto& c : oracle_cases()) {
    AffineDatum d = c.datum();
    CoboundaryGroup b = coboundary_group(d, o.cap);
    Json containing = Json::array();
    for (const auto& [name, sigma] : sigmas) {
      if (!check_action_compatible(d, sigma).holds) continue;
      containing.push_back(name);
      CocycleGroup z = cocycle_group(d, sigma, o.cap);
      for (const auto& G : b.b2.elements)
        if (!check_cocycle(d, G, sigma).holds || z.index_of(G) < 0) fail(r, Json{{"case", c.name()}, {"sigma", name}});
    }
    if (containing.size() < 2) fail(r, Json{{"case", c.name()}, {"reason", "fewer than two equation sets"}});
    rows.push_back(Json{{"case", c.name()}, {"B2_order", b.b2.elements.size()}, {"sigmas", containing}});
  }
  r.details["cases"] = rows;
}

void equivalence(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  for (const auto& c : oracle_cases()) {
    AffineDatum d = c.datum();
    auto z = enumerate_cocycles(d, group_axioms(), o.cap);
    std::vector<Extension> rec;
    for (const auto& T : z) rec.push_back(reconstruct(d, T));
    std::size_t pairs = 0, equivalent = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j) {
        bool a = are_equivalent(d, z[i], z[j]);
        bool b = find_stabilized_isomorphism(rec[i], rec[j]).has_value();
        ++pairs;
        equivalent += a;
        if (a != b) fail(r, Json{{"case", c.name()}, {"i", i}, {"j", j}, {"coboundary", a}, {"gamma", b}});
      }
    rows.push_back(Json{{"case", c.name()}, {"pairs", pairs}, {"equivalent_pairs", equivalent}});
  }
  r.details["cases"] = rows;
}

void stabilizer_claim(ClaimResult& r, const SuiteOptions&) {
  Json rows = Json::array();
  auto one = [&](const std::string& name, const Extension& e) {
    Report rep = verify_stabilizer_correspondence(e);
    rows.push_back(Json{{"extension", name}, {"holds", rep.holds}, {"stab_order", rep.details["stab_order"]},
                        {"z1_order", rep.details["z1_order"]}});
    if (!rep.holds) fail(r, Json{{"extension", name}, {"witness", rep.witness}});
  };
  for (const auto& c : oracle_cases()) one(c.name(), c.extension());
  for (const auto& ne : extension_catalog()) one(ne.name, ne.ext);
  r.details["extensions"] = rows;
}

void commutator_laws(ClaimResult& r, const SuiteOptions& o) {
  const Term m = group_malcev_term();
  std::mt19937_64 rng(o.seed);
  Json rows = Json::array();
  std::size_t checks = 0;
  auto record = [&](const Report& rep, const std::string& law, const FiniteAlgebra& g) {
    ++checks;
    if (!rep.holds) fail(r, Json{{"law", law}, {"algebra", g.name()}, {"witness", rep.witness}});
  };
  for (const auto& g : group_catalog()) {
    auto cons = all_congruences(g);
    std::size_t before = checks;
    for (const auto& a : cons) {
      record(check_delta_one_abelian(g, a), "A(alpha)/Delta_{alpha 1} abelian", g);
      record(check_diagonal_class(g, a, m), "diagonal class", g);
      record(check_delta_one_quotient(g, a), "Delta_{alpha 1} modulo [alpha,1]", g);
      const bool abelian = is_abelian(g, a);
      for (const auto& b : cons) {
        record(check_delta_same_top(g, a, b), "same top", g);
        if (!abelian) continue;
        record(check_delta_same_top_abelian(g, a, b), "same top, abelian alpha", g);
        record(check_delta_descriptions(g, a, b, m), "three descriptions", g);
        if (a.leq(b) && tc_commutator(g, b, a).is_equality()) record(check_delta_meet(g, a, b), "meet with alpha-hat", g);
      }
    }
    rows.push_back(Json{{"algebra", g.name()}, {"congruences", cons.size()}, {"checks", checks - before}});
  }
  // tensor products over abelian B with random transfers
  std::size_t tensors = 0;
  for (const auto& b : group_catalog()) {
    if (!is_abelian(b, Partition::total(b.size()))) continue;
    for (const auto& q : group_catalog()) {
      if (b.size() * q.size() > 16) continue;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Table> T;
        std::uniform_int_distribution<int> pick(0, b.size() - 1);
        for (int f = 0; f < q.num_ops(); ++f) {
          Table t(checked_pow(q.size(), q.arity(f)));
          for (auto& v : t) v = pick(rng);
          T.push_back(std::move(t));
        }
        Report rep = check_tensor_right_central(b, q, m, 0, T);
        ++tensors;
        if (!rep.holds) fail(r, Json{{"law", "tensor right central"}, {"B", b.name()}, {"Q", q.name()}});
      }
    }
  }
  r.details["algebras"] = rows;
  r.details["tensor_products"] = tensors;
}

void central_decomposition(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  for (const auto& g : group_catalog()) {
    Congruence z = center_congruence(g);
    ExtensionDecomposition dec = decompose_extension(g, z, group_malcev_term());
    bool iso = find_isomorphism(g, dec.product, o.seed).has_value();
    rows.push_back(Json{{"algebra", g.name()}, {"kernel_part", dec.kernel_part.size()},
                        {"quotient_part", dec.quotient_part.size()}, {"holds", dec.report.holds}, {"isomorphic", iso}});
    if (!dec.report.holds || !iso) fail(r, Json{{"algebra", g.name()}, {"witness", dec.report.witness}});
  }
  r.details["groups"] = rows;
}

void nilpotent(ClaimResult& r, const SuiteOptions&) {
  Json rows = Json::array();
  for (const char* name : {"D4", "Q8"}) {
    const FiniteAlgebra& g = catalog_group(name);
    NilpotentDecomposition dec = decompose_nilpotent(g, 2, group_malcev_term());
    bool abelian = true;
    for (const auto& f : dec.factors) abelian = abelian && is_abelian(f, Partition::total(f.size()));
    bool product2 = check_product_nilpotent(dec.product, 2).holds;
    bool product1 = check_product_nilpotent(dec.product, 1).holds;
    Json sizes = Json::array();
    for (const auto& f : dec.factors) sizes.push_back(f.size());
    rows.push_back(Json{{"algebra", name}, {"decomposed", dec.report.holds}, {"factor_sizes", sizes},
                        {"factors_abelian", abelian}, {"product_two_step", product2}, {"product_abelian", product1}});
    if (!dec.report.holds || dec.factors.size() != 2 || !abelian || !product2 || product1) fail(r, name);
  }
  r.details["groups"] = rows;
}

void trivial_action(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  std::vector<std::pair<std::string, AffineDatum>> data;
  for (const auto& c : oracle_cases()) data.emplace_back(c.name(), c.datum());
  for (const auto& ne : extension_catalog()) data.emplace_back(ne.name, extract_datum(ne.ext, group_malcev_term()).datum);
  for (const auto& [name, d] : data) {
    Report rep = central_extension_suite(d, group_axioms(), group_malcev_term(), o.cap);
    rows.push_back(Json{{"datum", name}, {"trivial_action", rep.details["trivial_action"]}, {"holds", rep.holds}});
    if (!rep.holds) fail(r, Json{{"datum", name}, {"witness", rep.witness}});
  }
  bool s3 = trivial_action_check(GroupCase{"Z3", "Z2", true}.datum()).holds;
  rows.push_back(Json{{"datum", "Z3 <-inv Z2 must fail"}, {"trivial_action", s3}});
  if (s3) fail(r, "the S3 datum passes the trivial action check");
  r.details["data"] = rows;
}

void abelian_subgroup(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  std::vector<std::pair<std::string, AffineDatum>> data = {{"Z4/Z2", catalog_extraction("Z4/Z2").datum},
                                                           {"Z2 <-triv Z2xZ2", GroupCase{"Z2", "Z2xZ2", false}.datum()}};
  for (const auto& [name, d] : data) {
    Report rep = abelian_extension_subgroup(d, group_axioms(), abelian_group_axioms(), o.cap);
    rows.push_back(Json{{"datum", name}, {"holds", rep.holds}, {"details", rep.details}});
    if (!rep.holds || rep.details["ext_classes"].empty()) fail(r, Json{{"datum", name}, {"witness", rep.witness}});
  }
  r.details["data"] = rows;
}

void group_descriptions(ClaimResult& r, const SuiteOptions&) {
  std::size_t count = 0;
  for (const auto& g : group_catalog())
    for (const auto& a : all_congruences(g)) {
      Report rep = verify_grp_lemma(g, a);
      ++count;
      if (!rep.holds) fail(r, Json{{"algebra", g.name()}, {"blocks", a.blocks()}, {"witness", rep.witness}});
    }
  r.details["congruences"] = count;
}

void difference_term(ClaimResult& r, const SuiteOptions&) {
  std::vector<FiniteAlgebra> family;
  std::vector<std::vector<Congruence>> thetas;
  for (const auto& g : group_catalog()) {
    family.push_back(g);
    thetas.push_back(all_congruences(g));
  }
  Report rep = verify_difference_term(family, group_malcev_term(), thetas, DifferenceScope::difference);
  r.details["groups"] = family.size();
  if (!rep.holds) fail(r, rep.witness);
}

void first_cohomology(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  for (const auto& c : oracle_cases()) {
    H1Result h = h1(c.datum(), 4, o.cap);
    rows.push_back(Json{{"case", c.name()}, {"z1", h.z1.size()}, {"pder", h.pder.size()}, {"h1", h.h1.invariant_factors()},
                        {"exact", h.exact}, {"depth", h.depth}});
    if (h.z1.size() != h.pder.size() * h.h1.order()) fail(r, c.name());
  }
  r.details["cases"] = rows;
}

void variety_meet(ClaimResult& r, const SuiteOptions& o) {
  Json rows = Json::array();
  for (const auto& c : oracle_cases()) {
    AffineDatum d = c.datum();
    Report rep = compare_variety_subgroups(d, group_axioms(), abelian_group_axioms(), o.cap);
    rows.push_back(Json{{"case", c.name()}, {"h2_orders", rep.details["h2_orders"]},
                        {"abelian_compatible", check_action_compatible(d, abelian_group_axioms()).holds}});
    if (!rep.holds) fail(r, Json{{"case", c.name()}, {"witness", rep.witness}});
  }
  r.details["cases"] = rows;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {"round-trip", "extract, reconstruct and recover every catalog extension", round_trip},
      {"h2-oracle", "H2 orders and extension types match classical group cohomology", h2_oracle},
      {"split-test", "a homomorphic lifting exists exactly for the split extension", split_test},
      {"coboundaries", "every 2-coboundary is a cocycle for each equation set containing the datum", coboundaries},
      {"equivalence", "cohomologous cocycles are exactly those with stabilized isomorphic extensions", equivalence},
      {"stabilizers", "Stab(pi) is isomorphic to Z1 through gamma -> d_gamma", stabilizer_claim},
      {"commutator-laws", "Delta and commutator identities and right centrality of tensor products", commutator_laws},
      {"central-decomposition", "A = A(alpha)/Delta_{alpha 1} (x)^T A/alpha for central alpha", central_decomposition},
      {"nilpotent", "D4 and Q8 are two-step products of abelian factors", nilpotent},
      {"trivial-action", "trivial actions give central reconstructions; S3 has a nontrivial action", trivial_action},
      {"abelian-subgroup", "classes realized by abelian extensions form a subgroup of H2", abelian_subgroup},
      {"group-descriptions", "group descriptions of A(alpha)/Delta hold for every catalog congruence", group_descriptions},
      {"difference-term", "x0 x1^-1 x2 is a difference term on the catalog", difference_term},
      {"first-cohomology", "Z1 is a union of cosets of the principal derivations", first_cohomology},
      {"variety-meet", "Z2 of a union of equation sets is the intersection", variety_meet},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claims()) out.push_back(c.id);
  return out;
}

std::vector<ClaimResult> run_suite(const SuiteOptions& opts) {
  for (const auto& id : opts.only) {
    auto ids = suite_claim_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown claim id " + id);
  }
  std::vector<ClaimResult> out;
  for (const auto& c : claims()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end()) continue;
    ClaimResult r{c.id, c.text, true, Json::object(), 0};
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(r, opts);
    } catch (const CapExceeded& e) {
      fail(r, Json{{"cap_exceeded", e.what()}});
    } catch (const PropertyError& e) {
      fail(r, Json{{"error", e.what()}, {"witness", e.witness()}});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

Json suite_to_json(const std::vector<ClaimResult>& results) {
  Json claims_json = Json::array();
  bool all = true;
  for (const auto& r : results) {
    claims_json.push_back(Json{{"id", r.id}, {"claim", r.claim}, {"holds", r.holds}, {"details", r.details}});
    all = all && r.holds;
  }
  return Json{{"holds", all}, {"claims", claims_json}};
}

std::string suite_to_text(const std::vector<ClaimResult>& results) {
  std::string out;
  char line[256];
  double total = 0;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-22s %s %8.2fs  %s\n", r.id.c_str(), r.holds ? "PASS" : "FAIL", r.seconds,
                  r.claim.c_str());
    out += line;
    total += r.seconds;
  }
  std::snprintf(line, sizeof line, "%zu claims, total %.2fs\n", results.size(), total);
  return out + line;
}

}  // namespace ua
