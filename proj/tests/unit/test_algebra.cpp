#include <random>
#include <set>

#include "doctest.h"
#include "ua/algebra.hpp"
#include "ua/groups.hpp"

using namespace ua;

namespace {

// naive fixpoint: apply every operation to every tuple until nothing changes
std::set<int> naive_closure(const FiniteAlgebra& alg, std::set<int> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int op = 0; op < alg.num_ops(); ++op) {
      int ar = alg.arity(op);
      for_each_tuple(static_cast<int>(cur.size()), ar, [&](const std::vector<int>& idx) {
        std::vector<int> args;
        for (int i : idx) args.push_back(cur[i]);
        if (s.insert(alg.apply(op, args)).second) grew = true;
      });
    }
  }
  return s;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<int>& perm) {
  // b = perm(a): b.f(perm x) = perm(a.f(x))
  const int n = a.size();
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<Table> tabs;
  for (int op = 0; op < a.num_ops(); ++op) {
    int ar = a.arity(op);
    Table t(a.table(op).size());
    std::vector<int> args(ar);
    for (std::size_t c = 0; c < t.size(); ++c) {
      decode_tuple(c, n, args);
      for (int& x : args) x = inv[x];
      t[c] = perm[a.apply(op, args)];
    }
    tabs.push_back(t);
  }
  return FiniteAlgebra(a.name() + "'", n, a.signature(), tabs);
}

}  // namespace

TEST_CASE("terms parse, print and evaluate") {
  Term t = parse_term("(mul x0 (inv x1))");
  CHECK(t.str() == "(mul x0 (inv x1))");
  CHECK(t.num_vars() == 2);
  CHECK(t.depth() == 2);
  CHECK(parse_term("e") == parse_term("(e)"));
  CHECK(parse_term("  ( mul   x1 e ) ").str() == "(mul x1 e)");
  CHECK_THROWS_AS(parse_term("(mul x0"), InputError);
  CHECK_THROWS_AS(parse_term("(x0 x1)"), InputError);
  CHECK_THROWS_AS(parse_term("mul x0)"), InputError);

  FiniteAlgebra z4 = cyclic_group(4);
  std::vector<int> env{3, 1};
  CHECK(eval_term(z4, t, env) == 2);
  CHECK_THROWS_AS(check_term(z4.signature(), parse_term("(mul x0)")), InputError);
  CHECK_THROWS_AS(check_term(z4.signature(), parse_term("(foo x0)")), InputError);
}

TEST_CASE("linearization keeps the term operation up to sigma") {
  Term t = parse_term("(mul (mul x1 x0) (inv x1))");
  Linearized l = linearize(t);
  CHECK(l.term.str() == "(mul (mul x0 x1) (inv x2))");
  CHECK(l.sigma == std::vector<int>{1, 0, 1});
  FiniteAlgebra s3 = symmetric_group3();
  for_each_tuple(6, 2, [&](const std::vector<int>& env) {
    std::vector<int> lin;
    for (int v : l.sigma) lin.push_back(env[v]);
    CHECK(eval_term(s3, t, env) == eval_term(s3, l.term, lin));
  });
}

TEST_CASE("catalog groups satisfy the group axioms") {
  for (const auto& g : group_catalog()) {
    CHECK_MESSAGE(is_group(g), g.name());
  }
  CHECK(find_counterexample(symmetric_group3(), abelian_group_axioms().back()).has_value());
  CHECK_FALSE(find_counterexample(catalog_group("Z2xZ4"), abelian_group_axioms().back()).has_value());
}

TEST_CASE("subalgebra generation agrees with naive fixpoint") {
  std::mt19937 rng(7);
  for (const auto& g : group_catalog()) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> gens;
      int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) gens.push_back(static_cast<int>(rng() % g.size()));
      auto sub = subalgebra_generate(g, gens);
      auto naive = naive_closure(g, std::set<int>(gens.begin(), gens.end()));
      // constants are always included
      naive.insert(g.table(2)[0]);
      naive = naive_closure(g, naive);
      CHECK(std::vector<int>(naive.begin(), naive.end()) == sub);
    }
  }
}

TEST_CASE("tuple closure agrees with subalgebra of the power algebra") {
  FiniteAlgebra s3 = symmetric_group3();
  FiniteAlgebra sq = power_algebra(s3, 2);
  CHECK(sq.size() == 36);
  std::vector<std::uint32_t> gens{static_cast<std::uint32_t>(1 * 6 + 2), static_cast<std::uint32_t>(3 * 6 + 3)};
  auto tuples = generate_tuples(s3, 2, gens);
  std::vector<int> g2(gens.begin(), gens.end());
  auto sub = subalgebra_generate(sq, g2);
  std::vector<int> t2(tuples.begin(), tuples.end());
  std::sort(t2.begin(), t2.end());
  CHECK(t2 == sub);
  CHECK_THROWS_AS(generate_tuples(s3, 12, {}), CapExceeded);
}

TEST_CASE("quotients and homomorphisms") {
  FiniteAlgebra z4 = cyclic_group(4);
  Partition even = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  Quotient q = quotient_algebra(z4, even);
  CHECK(q.algebra.size() == 2);
  CHECK(is_homomorphism(z4, q.algebra, q.map));
  CHECK(find_isomorphism(q.algebra, cyclic_group(2)).has_value());
  Partition bad = Partition::from_blocks(4, {{0, 1}});
  CHECK(compatibility_failure(z4, bad).has_value());
  CHECK_THROWS_AS(quotient_algebra(z4, bad), InputError);
}

TEST_CASE("isomorphism search finds relabelings and separates non-isomorphic groups") {
  std::mt19937 rng(11);
  const auto& cat = group_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    std::vector<int> perm(cat[i].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    FiniteAlgebra b = relabel(cat[i], perm);
    auto iso = find_isomorphism(cat[i], b);
    REQUIRE(iso.has_value());
    CHECK(is_homomorphism(cat[i], b, *iso));
    CHECK(find_isomorphism(cat[i], b, 42).has_value());
    for (std::size_t j = 0; j < cat.size(); ++j)
      if (j != i) CHECK_FALSE(find_isomorphism(cat[i], cat[j]).has_value());
  }
}

TEST_CASE("isomorphism search agrees with brute force over all bijections") {
  // small non-group algebras: random binary operations on 4 elements
  std::mt19937 rng(3);
  Signature sig({{"f", 2}});
  for (int trial = 0; trial < 30; ++trial) {
    Table t(16);
    for (int& v : t) v = static_cast<int>(rng() % 4);
    Table u(16);
    if (trial % 2)
      for (int& v : u) v = static_cast<int>(rng() % 4);
    FiniteAlgebra a("a", 4, sig, {t});
    FiniteAlgebra b = trial % 2 ? FiniteAlgebra("b", 4, sig, {u}) : relabel(a, {2, 0, 3, 1});
    bool brute = false;
    std::vector<int> perm{0, 1, 2, 3};
    do brute = brute || is_homomorphism(a, b, perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(find_isomorphism(a, b).has_value() == brute);
  }
}

TEST_CASE("partition lattice operations") {
  Partition a = Partition::from_blocks(6, {{0, 1}, {2, 3}});
  Partition b = Partition::from_blocks(6, {{1, 2}, {4, 5}});
  Partition j = a.join(b);
  CHECK(j.blocks() == std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5}});
  CHECK(a.meet(b).is_equality());
  CHECK(a.leq(j));
  CHECK_FALSE(j.leq(a));
  CHECK(Partition::total(3).is_total());
}
