#include <algorithm>

#include "doctest.h"
#include "ua/cohomology.hpp"
#include "ua/oracle.hpp"

using namespace ua;

namespace {

AffineDatum group_datum(const std::string& k, const std::string& q, bool inversion) {
  const FiniteAlgebra& K = catalog_group(k);
  const FiniteAlgebra& Q = catalog_group(q);
  GroupAction phi = inversion ? inversion_action(K, Q) : trivial_action(K, Q);
  return extract_datum(semidirect_extension(K, Q, phi), group_malcev_term()).datum;
}

Extraction catalog_extraction(const std::string& name) {
  for (const auto& ne : extension_catalog())
    if (ne.name == name) return extract_datum(ne.ext, group_malcev_term());
  throw std::runtime_error("no extension " + name);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// crossed homomorphisms Q -> K counted directly
std::size_t classical_z1(const FiniteAlgebra& K, const FiniteAlgebra& Q, const GroupAction& phi) {
  std::size_t count = 0;
  for_each_tuple(K.size(), Q.size(), [&](const std::vector<int>& h) {
    for (int x = 0; x < Q.size(); ++x)
      for (int y = 0; y < Q.size(); ++y)
        if (h[Q.apply(0, {x, y})] != K.apply(0, {h[x], phi[x][h[y]]})) return;
    ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("H2 of the Z2 kernel datum") {
  Extraction ex = catalog_extraction("Z4/Z2");
  const AffineDatum& d = ex.datum;
  CohomologyResult r = h2(d, group_axioms(), identify_group);
  CHECK(r.order() == 2);
  CHECK(r.invariant_factors() == std::vector<int>{2});
  CHECK(sorted(r.types) == std::vector<std::string>{"Z2xZ2", "Z4"});
  CHECK(r.types[r.split_class] == "Z2xZ2");
  CHECK(r.z2.elements.size() == r.b2.b2.elements.size() * r.order());
  for (int rep : r.reps) CHECK(check_cocycle(d, r.z2.elements[rep], group_axioms()).holds);

  int t = r.z2.index_of(ex.cocycle);
  REQUIRE(t >= 0);
  CHECK(r.types[r.class_of[t]] == "Z4");
  CHECK(r.class_of[r.z2.group.add(t, t)] == r.split_class);
  CHECK(r.z2.group.zero() == r.z2.index_of(zero_cocycle(d)));

  Extraction ex2 = catalog_extraction("Z2xZ2/Z2");
  CohomologyResult r2 = h2(ex2.datum, group_axioms(), identify_group);
  CHECK(r2.order() == 2);
  CHECK(sorted(r2.types) == sorted(r.types));
}

TEST_CASE("Z2 closure and propagation against brute force") {
  for (const auto& d : {catalog_extraction("Z4/Z2").datum, group_datum("Z3", "Z2", true),
                        group_datum("Z2", "Z3", false)}) {
    auto fast = enumerate_cocycles(d, group_axioms());
    auto slow = enumerate_cocycles(d, group_axioms(), std::size_t{1} << 24, Z2Mode::brute_force);
    CHECK(fast == slow);
    for (const auto& a : fast)
      for (const auto& b : fast) CHECK(check_cocycle(d, cocycle_add(d, a, b), group_axioms()).holds);
  }
  CHECK_THROWS_AS(enumerate_cocycles(group_datum("Z2", "Z2xZ2", false), group_axioms(), 8), CapExceeded);
}

TEST_CASE("equality kernel gives trivial H2") {
  const FiniteAlgebra& z4 = catalog_group("Z4");
  Extension e = make_extension(z4, Partition::equality(4), {}, term_table(z4, group_malcev_term(), 3));
  AffineDatum d = extract_datum(e, group_malcev_term()).datum;
  CHECK(h2(d, group_axioms()).order() == 1);
}

TEST_CASE("coboundaries are cocycles for several equation sets") {
  Extraction ex = catalog_extraction("Z4/Z2");
  const AffineDatum& d = ex.datum;
  CoboundaryGroup b = coboundary_group(d);
  std::size_t total = 0;
  for (auto k : b.multiplicity) total += k;
  CHECK(total == fiber_section_count(d, 1 << 20));
  CHECK(b.b2.index_of(zero_cocycle(d)) >= 0);
  for (const auto& G : b.b2.elements) {
    CHECK(check_cocycle(d, G, group_axioms()).holds);
    CHECK(check_cocycle(d, G, abelian_group_axioms()).holds);
  }
}

TEST_CASE("equivalence by coboundaries and by stabilized isomorphisms") {
  Extraction ex = catalog_extraction("Z4/Z2");
  const AffineDatum& d = ex.datum;
  CHECK(are_equivalent(d, ex.cocycle, ex.cocycle));
  CHECK_FALSE(are_equivalent(d, zero_cocycle(d), ex.cocycle));
  for (const char* name : {"Z4/Z2", "D4/center"}) {
    CAPTURE(name);
    Extraction e = catalog_extraction(name);
    auto z = enumerate_cocycles(e.datum, group_axioms());
    for (const auto& a : z) {
      Extension A = reconstruct(e.datum, a);
      for (const auto& b : z) {
        bool coboundary = are_equivalent(e.datum, a, b);
        bool iso = find_stabilized_isomorphism(A, reconstruct(e.datum, b)).has_value();
        CHECK(coboundary == iso);
      }
    }
  }
}

TEST_CASE("class count equals gamma-equivalence classes") {
  AffineDatum d = group_datum("Z2", "Z2xZ2", false);
  CohomologyResult r = h2(d, group_axioms(), identify_group);
  CHECK(r.order() == 8);
  std::vector<Extension> reps;
  for (const auto& T : r.z2.elements) {
    Extension e = reconstruct(d, T);
    bool found = false;
    for (const auto& x : reps) found = found || find_stabilized_isomorphism(x, e).has_value();
    if (!found) reps.push_back(e);
  }
  CHECK(reps.size() == r.order());
}

TEST_CASE("stabilizers correspond to derivations") {
  for (const auto& ne : extension_catalog()) {
    CAPTURE(ne.name);
    Report rep = verify_stabilizer_correspondence(ne.ext);
    CHECK(rep.holds);
    CHECK(rep.details["stab_order"] == rep.details["z1_order"]);
  }
  struct Case {
    const char* k;
    const char* q;
    bool inv;
  };
  for (auto c : {Case{"Z2", "Z2", false}, Case{"Z3", "Z2", true}, Case{"Z2", "Z3", false}, Case{"Z4", "Z2", true}}) {
    const FiniteAlgebra& K = catalog_group(c.k);
    const FiniteAlgebra& Q = catalog_group(c.q);
    GroupAction phi = c.inv ? inversion_action(K, Q) : trivial_action(K, Q);
    Extension e = semidirect_extension(K, Q, phi);
    AffineDatum d = extract_datum(e, group_malcev_term()).datum;
    CHECK(derivations(d).size() == classical_z1(K, Q, phi));
    CHECK(stabilizers(e).size() == derivations(d).size());
    CHECK(verify_stabilizer_correspondence(e).holds);
    // derivations are exactly the h with zero coboundary
    std::size_t kernel = 0;
    for_each_fiber_section(d, [&](const std::vector<int>& h) {
      kernel += coboundary(d, h) == zero_cocycle(d);
      return true;
    });
    CHECK(kernel == derivations(d).size());
  }
}

TEST_CASE("first cohomology") {
  AffineDatum triv = catalog_extraction("Z4/Z2").datum;
  H1Result a = h1(triv);
  CHECK(a.exact);
  CHECK(a.pder.size() == 1);
  CHECK(a.h1.order() == a.z1_group.order());
  CHECK(a.h1.order() == 2);

  // inner derivations exhaust Z1 for Z3 x| Z2
  H1Result b = h1(group_datum("Z3", "Z2", true));
  CHECK(b.z1.size() == 3);
  CHECK(b.pder.size() == 3);
  CHECK(b.h1.order() == 1);
  CHECK(b.pstab >= 1);
}

TEST_CASE("trivial actions and central reconstructions") {
  CHECK(trivial_action_check(catalog_extraction("Z4/Z2").datum).holds);
  CHECK(trivial_action_check(catalog_extraction("D4/center").datum).holds);
  AffineDatum s3 = group_datum("Z3", "Z2", true);
  Report t = trivial_action_check(s3);
  CHECK_FALSE(t.holds);
  CHECK(t.witness.contains("I"));

  Report r = central_extension_suite(catalog_extraction("Q8/center").datum, group_axioms(), group_malcev_term());
  CHECK(r.holds);
  CHECK(r.details["trivial_action"] == true);
  for (const auto& row : r.details["classes"]) {
    CHECK(row["right_central"] == true);
    CHECK(row["left_central"] == true);
  }
  Report s = central_extension_suite(s3, group_axioms());
  CHECK(s.holds);
  CHECK(s.details["trivial_action"] == false);
}

TEST_CASE("variety subgroups") {
  AffineDatum d = group_datum("Z2", "Z2xZ2", false);
  Report same = compare_variety_subgroups(d, group_axioms(), group_axioms());
  CHECK(same.holds);
  Report ab = compare_variety_subgroups(d, group_axioms(), abelian_group_axioms());
  CHECK(ab.holds);
  CHECK(ab.details["second_in_first"] == true);
  CHECK(ab.details["h2_orders"][0] == 8);
  CHECK(ab.details["h2_orders"][1] == 4);

  auto bad = group_axioms();
  bad.push_back({parse_term("x0"), parse_term("x1")});
  Report none = compare_variety_subgroups(d, group_axioms(), bad);
  CHECK(none.holds);
  CHECK(none.details["h2_orders"][1] == "datum not contained");

  Report ext = abelian_extension_subgroup(d, group_axioms(), abelian_group_axioms());
  CHECK(ext.holds);
  CHECK(ext.details["ext_classes"].size() == 4);
}

TEST_CASE("H2 agrees with the classical computation") {
  struct Case {
    const char* k;
    const char* q;
    bool inv;
  };
  for (auto c : {Case{"Z2", "Z2", false}, Case{"Z3", "Z2", true}, Case{"Z2", "Z3", false}, Case{"Z4", "Z2", true},
                 Case{"Z2", "Z2xZ2", false}}) {
    CAPTURE(c.k);
    CAPTURE(c.q);
    const FiniteAlgebra& K = catalog_group(c.k);
    const FiniteAlgebra& Q = catalog_group(c.q);
    GroupAction phi = c.inv ? inversion_action(K, Q) : trivial_action(K, Q);
    ClassicalH2 oracle = classical_h2(K, Q, phi);
    CohomologyResult r = h2(group_datum(c.k, c.q, c.inv), group_axioms(), identify_group);
    CHECK(r.invariant_factors() == oracle.invariant_factors);
    CHECK(sorted(r.types) == sorted(oracle.types));
  }
}

TEST_CASE("principal derivations and the semidirect test") {
  auto p = principal_derivations(group_datum("Z3", "Z2", true));
  CHECK(p.size() == 3);
  for (const auto& h : p) CHECK(is_derivation(group_datum("Z3", "Z2", true), h));
  CHECK(principal_derivations(catalog_extraction("Z4/Z2").datum).size() == 1);
  CHECK(is_semidirect(semidirect_extension(catalog_group("Z3"), catalog_group("Z2"), inversion_action(catalog_group("Z3"), catalog_group("Z2")))).has_value());
}
