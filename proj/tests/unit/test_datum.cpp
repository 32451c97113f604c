#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "ua/cocycle.hpp"
#include "ua/oracle.hpp"

using namespace ua;

namespace {

Extraction extract(const std::string& name) {
  for (const auto& ne : extension_catalog())
    if (ne.name == name) return extract_datum(ne.ext, group_malcev_term());
  throw std::runtime_error("no extension " + name);
}

const Extension& catalog_ext(const std::string& name) {
  static const auto cat = extension_catalog();
  for (const auto& ne : cat)
    if (ne.name == name) return ne.ext;
  throw std::runtime_error("no extension " + name);
}

bool satisfies_group_axioms(const FiniteAlgebra& a) {
  for (const auto& eq : group_axioms())
    if (find_counterexample(a, eq)) return false;
  return true;
}

FiniteAlgebra mul_reduct(const FiniteAlgebra& g) {
  return FiniteAlgebra(g.name() + "_mul", g.size(), Signature({{"mul", 2}}), {g.table(0)});
}

}  // namespace

TEST_CASE("Z4 over Z2: datum and transfer") {
  Extraction ex = extract("Z4/Z2");
  const AffineDatum& d = ex.datum;
  CHECK(d.nq() == 2);
  CHECK(d.nc() == 4);
  CHECK(all_hold(validate_datum(d)));
  // T_mul(1,1) = [l(0) // l(1) l(1)] = [0 // 2]
  CHECK(ex.cocycle.tables[0][1 * 2 + 1] == d.dq.cls(0, 2));
  CHECK(ex.cocycle.tables[0][0] == d.zero(0));
  CHECK(check_cocycle(d, ex.cocycle, group_axioms()).holds);
  CHECK(check_cocycle(d, zero_cocycle(d), group_axioms()).holds);
  CHECK(check_action_compatible(d, group_axioms()).holds);
  CHECK(check_action_compatible(d, group_axioms(), CompatMode::full).holds);
}

TEST_CASE("phi sends x to [r(x) // x]") {
  for (const auto& ne : extension_catalog()) {
    Extraction ex = extract_datum(ne.ext, group_malcev_term());
    auto r = ne.ext.trace();
    for (int x = 0; x < ne.ext.B.size(); ++x) CHECK(ex.phi[x] == ex.datum.dq.cls(r[x], x));
  }
}

TEST_CASE("all catalog extensions give valid data") {
  for (const auto& ne : extension_catalog()) {
    CAPTURE(ne.name);
    Extraction ex = extract_datum(ne.ext, group_malcev_term());
    for (const auto& rep : validate_datum(ex.datum)) {
      CAPTURE(rep.claim);
      CHECK(rep.holds);
    }
    CHECK(check_cocycle(ex.datum, ex.cocycle, group_axioms()).holds);
    CHECK(check_action_compatible(ex.datum, group_axioms(), CompatMode::full).holds);
  }
}

TEST_CASE("corrupted data fail D1 and D3") {
  Extraction ex = extract("D4/center");
  AffineDatum d = ex.datum;
  // swap two values of f_delta for inv inside one fiber
  const int inv = d.Q.op_index("inv");
  Table& t = d.f_delta[inv];
  int a = -1, b = -1;
  for (int x = 0; x < d.nc() && b < 0; ++x)
    for (int y = x + 1; y < d.nc() && b < 0; ++y)
      if (d.class_fiber[t[x]] == d.class_fiber[t[y]] && t[x] != t[y]) a = x, b = y;
  REQUIRE(b >= 0);
  std::swap(t[a], t[b]);
  auto reps = validate_datum(d);
  CHECK_FALSE(all_hold(reps));
  CHECK_FALSE(reps[1].holds);

  AffineDatum d3 = ex.datum;
  std::swap(d3.rho[0], d3.rho[d3.rho.size() - 1]);
  bool any = false;
  for (const auto& rep : validate_datum(d3))
    if (rep.claim.rfind("D3", 0) == 0) any = !rep.holds;
  CHECK(any);
}

TEST_CASE("plus_u across blocks throws") {
  Extraction ex = extract("Z4/Z2");
  const AffineDatum& d = ex.datum;
  int x = d.fiber[0][0], y = d.fiber[0].back();
  CHECK(d.plus_u(x, 0, y) == d.add(0, x, y));
  CHECK_THROWS_AS(d.plus_u(x, 1, y), std::invalid_argument);
}

TEST_CASE("fiber additions form abelian groups") {
  for (const auto& ne : extension_catalog()) {
    Extraction ex = extract_datum(ne.ext, group_malcev_term());
    const AffineDatum& d = ex.datum;
    for (int q = 0; q < d.nq(); ++q)
      for (int x : d.fiber[q]) {
        CHECK(d.add(q, x, d.zero(q)) == x);
        CHECK(d.add(q, x, d.neg(q, x)) == d.zero(q));
        CHECK(d.sub(q, x, x) == d.zero(q));
        for (int y : d.fiber[q]) CHECK(d.add(q, x, y) == d.add(q, y, x));
      }
  }
}

TEST_CASE("semidirect expansion matches the zero-cocycle extension") {
  Extraction ex = extract("D4/center");
  const AffineDatum& d = ex.datum;
  Extension z = reconstruct(d, zero_cocycle(d));
  for (const char* s : {"(mul x0 x1)", "(mul (inv x0) (mul x1 x0))", "(inv (mul x0 x1))", "x1", "e"}) {
    Term t = parse_term(s);
    for (int x = 0; x < d.nc(); ++x)
      for (int y = 0; y < d.nc(); ++y) {
        std::vector<int> env{x, y};
        CHECK(semidirect_expansion(d, t, env) == eval_term(z.B, t, env));
      }
  }
}

TEST_CASE("C2 decides membership of A_T in the variety") {
  // every fiber-respecting table for Z4 / Z2; exhaustive
  Extraction ex = extract("Z4/Z2");
  const AffineDatum& d = ex.datum;
  TwoCocycle T = zero_cocycle(d);
  std::vector<std::pair<int, std::size_t>> cells;
  for (int f = 0; f < d.signature().size(); ++f)
    for (std::size_t c = 0; c < T.tables[f].size(); ++c) cells.emplace_back(f, c);
  std::vector<int> qs;
  int agree = 0, cocycles = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto [f, c] = cells[i];
      qs.resize(d.arity(f));
      decode_tuple(c, d.nq(), qs);
      const auto& fib = d.fiber[d.q_apply(f, qs)];
      T.tables[f][c] = fib[(mask >> i) & 1];
    }
    bool c2 = check_cocycle(d, T, group_axioms()).holds;
    bool grp = satisfies_group_axioms(reconstruct(d, T).B);
    agree += c2 == grp;
    cocycles += c2;
  }
  CHECK(agree == (1 << cells.size()));
  CHECK(cocycles > 0);

  // random tables for D4 over its center
  Extraction ex2 = extract("D4/center");
  const AffineDatum& d2 = ex2.datum;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    TwoCocycle U = zero_cocycle(d2);
    int f = static_cast<int>(rng() % 3);
    std::size_t c = rng() % U.tables[f].size();
    qs.resize(d2.arity(f));
    decode_tuple(c, d2.nq(), qs);
    const auto& fib = d2.fiber[d2.q_apply(f, qs)];
    U.tables[f][c] = fib[rng() % fib.size()];
    bool c2 = check_cocycle(d2, U, group_axioms()).holds;
    CHECK(c2 == satisfies_group_axioms(reconstruct(d2, U).B));
  }
}

TEST_CASE("a value outside its fiber fails C1") {
  Extraction ex = extract("Z4/Z2");
  TwoCocycle T = ex.cocycle;
  T.tables[0][1 * 2 + 1] = ex.datum.fiber[1][0];
  CHECK_FALSE(check_fiber_condition(ex.datum, T).holds);
  CHECK_FALSE(check_cocycle(ex.datum, T, group_axioms()).holds);
  CHECK_THROWS_AS(reconstruct(ex.datum, T), PropertyError);
}

TEST_CASE("reconstruction recovers the extension") {
  for (const auto& [name, group] : std::vector<std::pair<std::string, std::string>>{
           {"Z4/Z2", "Z4"}, {"Z2xZ2/Z2", "Z2xZ2"}, {"D4/center", "D4"}, {"Q8/center", "Q8"},
           {"Z2xZ4/<(0,2)>", "Z2xZ4"}, {"Z2xZ4/<(1,0)>", "Z2xZ4"}}) {
    CAPTURE(name);
    Extraction ex = extract(name);
    Extension rec = reconstruct(ex.datum, ex.cocycle);
    CHECK(identify_group(rec.B) == group);
    CHECK(check_realization(rec, ex.datum).holds);
    CHECK(check_realization(catalog_ext(name), ex.datum).holds);
  }
  Extraction z4 = extract("Z4/Z2");
  CHECK(identify_group(reconstruct(z4.datum, zero_cocycle(z4.datum)).B) == "Z2xZ2");
  Extraction q8 = extract("Q8/center");
  CHECK(identify_group(reconstruct(q8.datum, zero_cocycle(q8.datum)).B) == "Z2xZ2xZ2");
}

TEST_CASE("realization fails for a different datum") {
  Extraction z4 = extract("Z4/Z2");
  CHECK_FALSE(check_realization(catalog_ext("D4/center"), z4.datum).holds);
}

TEST_CASE("retractions exist exactly for split extensions") {
  CHECK(find_retraction(catalog_ext("Z2xZ2/Z2")).has_value());
  CHECK(find_retraction_direct(catalog_ext("Z2xZ2/Z2")).has_value());
  CHECK_FALSE(find_retraction(catalog_ext("Z4/Z2")).has_value());
  CHECK_FALSE(find_retraction_direct(catalog_ext("Z4/Z2")).has_value());
  CHECK_FALSE(find_retraction(catalog_ext("Q8/center")).has_value());
  CHECK(find_retraction(catalog_ext("Z2xZ4/<(1,0)>")).has_value());
  CHECK_FALSE(find_retraction(catalog_ext("Z2xZ4/<(0,2)>")).has_value());
  for (const auto& ne : extension_catalog())
    if (ne.ext.B.size() <= 4) {
      auto r = find_retraction(ne.ext);
      CHECK(r.has_value() == find_retraction_direct(ne.ext).has_value());
    }
}

TEST_CASE("tensor product with the carry is Z4") {
  FiniteAlgebra z2 = mul_reduct(cyclic_group(2));
  Table carry{0, 0, 0, 1};
  FiniteAlgebra t = tensor_product(z2, z2, z2.table(0), {carry});
  CHECK(find_isomorphism(t, mul_reduct(cyclic_group(4))).has_value());
  FiniteAlgebra split = tensor_product(z2, z2, z2.table(0), {Table{0, 0, 0, 0}});
  CHECK(find_isomorphism(split, mul_reduct(catalog_group("Z2xZ2"))).has_value());
  CHECK_THROWS_AS(tensor_product(z2, z2, z2.table(0), {Table{0, 0, 0}}), InputError);
}

TEST_CASE("coboundaries and lifting changes") {
  Extraction ex = extract("Z4/Z2");
  const AffineDatum& d = ex.datum;
  CHECK(coboundary(d, d.zero_class) == zero_cocycle(d));
  CHECK_FALSE(cocycle_difference_coboundary(d, zero_cocycle(d), ex.cocycle).has_value());
  CHECK(cocycle_add(d, ex.cocycle, cocycle_neg(d, ex.cocycle)) == zero_cocycle(d));
  CHECK(cocycle_sub(d, ex.cocycle, ex.cocycle) == zero_cocycle(d));

  for (const auto& ne : extension_catalog()) {
    CAPTURE(ne.name);
    Extraction a = extract_datum(ne.ext, group_malcev_term());
    std::vector<int> lift(ne.ext.Q.size());
    for (int q = 0; q < ne.ext.Q.size(); ++q)
      for (int x = 0; x < ne.ext.B.size(); ++x)
        if (ne.ext.pi[x] == q) lift[q] = x;  // greatest member
    Extraction b = extract_datum(make_extension(ne.ext.B, ne.ext.beta, lift, ne.ext.m), group_malcev_term());
    auto h = cocycle_difference_coboundary(a.datum, a.cocycle, b.cocycle);
    REQUIRE(h.has_value());
    CHECK(cocycle_add(a.datum, a.cocycle, coboundary(a.datum, *h)) == b.cocycle);
    CHECK(check_cocycle(a.datum, coboundary(a.datum, *h), group_axioms()).holds);
  }
}
