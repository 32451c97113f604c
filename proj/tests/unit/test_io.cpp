#include "doctest.h"
#include "ua/io.hpp"
#include "ua/oracle.hpp"

using namespace ua;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("algebra files round trip") {
  for (const auto& g : group_catalog()) {
    FiniteAlgebra back = algebra_from_json(parse_json(algebra_to_json(g).dump(2), "mem"), "mem");
    CHECK(back.same_tables(g));
    CHECK(back.name() == g.name());
  }
  Json z4 = algebra_to_json(catalog_group("Z4"));
  CHECK(z4["operations"]["e"] == 0);
  CHECK(z4["operations"]["mul"][1][3] == 0);
}

TEST_CASE("diagnostics name the line or the field") {
  std::string text = "{\n  \"size\": 2,\n  \"signature\": [,]\n}";
  CHECK(error_of([&] { parse_json(text, "bad.json"); }).rfind("bad.json:3:", 0) == 0);

  Json z2 = algebra_to_json(catalog_group("Z2"));
  z2["operations"]["mul"][1][0] = 5;
  CHECK(error_of([&] { algebra_from_json(z2, "z2.json"); }).find("operations.mul[1][0]") != std::string::npos);
  z2.erase("size");
  CHECK(error_of([&] { algebra_from_json(z2, "z2.json"); }).find("size: missing") != std::string::npos);

  const FiniteAlgebra& z4 = catalog_group("Z4");
  CHECK(error_of([&] { congruence_from_json(Json{{"blocks", {{0, 1}}}}, z4, "c.json"); }).find("not a congruence") !=
        std::string::npos);
  CHECK(congruence_from_json(Json{{"blocks", {{0, 2}, {1, 3}}}}, z4, "c.json").num_blocks() == 2);
  CHECK(error_of([&] { equations_from_json(Json::array({Json::array({"(mul x0", "x0"})}), "s.json"); })
            .find("s.json: [0]") == 0);
  CHECK(equations_from_json("@groups", "s").size() == group_axioms().size());
}

TEST_CASE("datum and cocycle files round trip") {
  for (const auto& ne : extension_catalog()) {
    CAPTURE(ne.name);
    Extraction ex = extract_datum(ne.ext, group_malcev_term());
    AffineDatum d = datum_from_json(parse_json(datum_to_json(ex.datum).dump(), "d"), "d");
    CHECK(d.f_delta == ex.datum.f_delta);
    CHECK(d.action == ex.datum.action);
    CHECK(d.zero_class == ex.datum.zero_class);
    CHECK(all_hold(validate_datum(d)));
    TwoCocycle T = cocycle_from_json(cocycle_to_json(d, ex.cocycle, ne.name), d, "t");
    CHECK(T == ex.cocycle);
    CHECK(check_cocycle(d, T, group_axioms()).holds);
  }
}

TEST_CASE("cohomology summary") {
  Extraction ex = extract_datum(extension_catalog()[0].ext, group_malcev_term());
  CohomologyResult r = h2(ex.datum, group_axioms(), identify_group);
  CHECK(cohomology_summary(r) == "H2 = Z/2, classes: [Z2xZ2 (split), Z4]");
  Json j = cohomology_to_json(ex.datum, r);
  CHECK(j["invariant_factors"] == Json::array({2}));
  CHECK(j["Z2_order"].get<int>() == 2 * j["B2_order"].get<int>());
  CHECK(group_name({}) == "0");
  CHECK(group_name({2, 4}) == "Z/2 x Z/4");
}
