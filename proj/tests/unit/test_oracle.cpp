#include <algorithm>

#include "doctest.h"
#include "ua/cocycle.hpp"
#include "ua/oracle.hpp"

using namespace ua;

TEST_CASE("twisted groups") {
  const FiniteAlgebra& z3 = catalog_group("Z3");
  const FiniteAlgebra& z2 = catalog_group("Z2");
  FiniteAlgebra s = twisted_group(z3, z2, inversion_action(z3, z2), {});
  CHECK(is_group(s));
  CHECK(identify_group(s) == "S3");
  CHECK(identify_group(twisted_group(z2, z2, trivial_action(z2, z2), Table{0, 0, 0, 1})) == "Z4");
  Extension e = semidirect_extension(z3, z2, inversion_action(z3, z2));
  CHECK(e.Q.size() == 2);
  CHECK(find_retraction(e).has_value());
}

TEST_CASE("action validation") {
  const FiniteAlgebra& z4 = catalog_group("Z4");
  const FiniteAlgebra& z2 = catalog_group("Z2");
  CHECK_FALSE(action_failure(z4, z2, inversion_action(z4, z2)).has_value());
  GroupAction bad = trivial_action(z4, z2);
  bad[1] = {0, 2, 1, 3};
  CHECK(action_failure(z4, z2, bad).has_value());
  CHECK(action_failure(catalog_group("S3"), z2, trivial_action(catalog_group("S3"), z2)).has_value());
  CHECK_THROWS_AS(inversion_action(z2, catalog_group("Z3")), InputError);
}

TEST_CASE("classical second cohomology") {
  const FiniteAlgebra& z2 = catalog_group("Z2");
  const FiniteAlgebra& z3 = catalog_group("Z3");
  const FiniteAlgebra& z4 = catalog_group("Z4");
  const FiniteAlgebra& v = catalog_group("Z2xZ2");

  ClassicalH2 a = classical_h2(z2, z2, trivial_action(z2, z2));
  CHECK(a.invariant_factors == std::vector<int>{2});
  CHECK(a.types == std::vector<std::string>{"Z2xZ2", "Z4"});
  CHECK(a.cocycles.size() == 4);
  CHECK(a.b2_order == 2);

  ClassicalH2 b = classical_h2(z2, v, trivial_action(z2, v));
  CHECK(b.invariant_factors == std::vector<int>{2, 2, 2});
  CHECK(b.cocycles.size() == 32);
  CHECK(b.b2_order == 4);
  auto types = b.types;
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  CHECK(types == std::vector<std::string>{"D4", "Q8", "Z2xZ2xZ2", "Z2xZ4"});

  ClassicalH2 c = classical_h2(z3, z2, inversion_action(z3, z2));
  CHECK(c.invariant_factors.empty());
  CHECK(c.types == std::vector<std::string>{"S3"});

  ClassicalH2 d = classical_h2(z4, z2, inversion_action(z4, z2));
  CHECK(d.invariant_factors == std::vector<int>{2});
  CHECK(d.types == std::vector<std::string>{"D4", "Q8"});

  // |Z^2| = |H^2| |B^2| in every case
  for (const auto* h : {&a, &b, &c, &d}) {
    std::size_t order = 1;
    for (int k : h->invariant_factors) order *= k;
    CHECK(h->cocycles.size() == order * h->b2_order);
  }
}

TEST_CASE("normal subgroup identifications hold across the catalog") {
  for (const auto& g : group_catalog()) {
    for (const auto& alpha : all_congruences(g)) {
      CAPTURE(g.name());
      Report r = verify_grp_lemma(g, alpha);
      CHECK(r.holds);
      CHECK(r.details["part1"] == true);
      CHECK(r.details["part2"] == true);
    }
  }
}

TEST_CASE("identifications include part 4 and sigma on central kernels") {
  const FiniteAlgebra& d4 = catalog_group("D4");
  Report r = verify_grp_lemma(d4, center_congruence(d4));
  CHECK(r.holds);
  CHECK(r.details["part4"] == true);
  CHECK(r.details["sigma"] == true);
}
