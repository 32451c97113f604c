#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "ua/commutator.hpp"
#include "ua/groups.hpp"

using namespace ua;

namespace {

// all set partitions of {0..n-1} as label vectors (restricted growth strings)
std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rg(n, 0);
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      out.push_back(Partition::from_labels(rg));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rg[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  if (n > 0) rec(rec, 1, 0);
  return out;
}

// least compatible partition containing pairs, by exhaustive search
Partition brute_cg(const FiniteAlgebra& a, const PairList& pairs) {
  std::optional<Partition> best;
  for (const auto& p : all_partitions(a.size())) {
    bool contains = true;
    for (auto [x, y] : pairs) contains = contains && p.related(x, y);
    if (!contains || compatibility_failure(a, p)) continue;
    if (!best || p.leq(*best)) best = p;
  }
  return *best;
}

// classical commutator subgroup [H,K] as a congruence of the group g
Congruence group_commutator(const FiniteAlgebra& g, const Congruence& alpha, const Congruence& beta) {
  const int e = g.table(2)[0];
  auto mul = [&](int x, int y) { return g.apply(0, {x, y}); };
  auto inv = [&](int x) { return g.apply(1, {x}); };
  std::vector<int> gens;
  for (int h = 0; h < g.size(); ++h)
    for (int k = 0; k < g.size(); ++k)
      if (alpha.related(h, e) && beta.related(k, e)) gens.push_back(mul(mul(inv(h), inv(k)), mul(h, k)));
  // normal closure
  std::vector<int> conj;
  for (int x : gens)
    for (int y = 0; y < g.size(); ++y) conj.push_back(mul(mul(y, x), inv(y)));
  auto sub = subalgebra_generate(g, conj);
  std::vector<int> label(g.size());
  std::vector<char> in(g.size(), 0);
  for (int x : sub) in[x] = 1;
  // cosets x N
  for (int x = 0; x < g.size(); ++x) {
    int least = x;
    for (int n : sub) least = std::min(least, mul(x, n));
    label[x] = least;
  }
  return Partition::from_labels(label);
}

}  // namespace

TEST_CASE("cg matches exhaustive minimal compatible partition") {
  FiniteAlgebra z4 = cyclic_group(4);
  CHECK(cg(z4, {{0, 2}}).blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(cg(z4, {{0, 1}}).is_total());
  CHECK(cg(z4, {}).is_equality());
  std::vector<FiniteAlgebra> algs{z4, direct_product(cyclic_group(2), cyclic_group(2)), test::semilattice(3),
                                  test::random_algebra(5, 1)};
  for (const auto& a : algs)
    for (int x = 0; x < a.size(); ++x)
      for (int y = x + 1; y < a.size(); ++y) CHECK(cg(a, {{x, y}}) == brute_cg(a, {{x, y}}));
}

TEST_CASE("congruence lattices of catalog groups are their normal subgroups") {
  CHECK(all_congruences(symmetric_group3()).size() == 3);
  CHECK(all_congruences(dihedral_group(4)).size() == 6);
  CHECK(all_congruences(quaternion_group()).size() == 6);
  CHECK(all_congruences(cyclic_group(8)).size() == 4);
  for (const auto& c : all_congruences(dihedral_group(4))) CHECK(is_congruence(dihedral_group(4), c));
}

TEST_CASE("pair algebra sizes and M(alpha,beta)") {
  FiniteAlgebra z4 = cyclic_group(4);
  Congruence half = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(pair_algebra(z4, half).size() == 8);
  CHECK(pair_algebra(z4, Partition::total(4)).size() == 16);
  CHECK(pair_algebra(z4, Partition::equality(4)).size() == 4);

  auto eq = m_matrices(z4, Partition::equality(4), Partition::equality(4));
  CHECK(eq.size() == 4);
  for (auto c : eq) {
    auto q = decode_quad(c, 4);
    CHECK((q[0] == q[1] && q[1] == q[2] && q[2] == q[3]));
  }

  FiniteAlgebra z2 = cyclic_group(2);
  auto m = m_matrices(z2, Partition::total(2), Partition::total(2));
  std::set<std::uint32_t> got(m.begin(), m.end()), want;
  for_each_tuple(2, 4, [&](const std::vector<int>& q) {
    if ((q[0] ^ q[1]) == (q[2] ^ q[3])) want.insert(encode_quad(q[0], q[1], q[2], q[3], 2));
  });
  CHECK(got == want);
}

TEST_CASE("Delta on Z4 and its two constructions") {
  FiniteAlgebra z4 = cyclic_group(4);
  Congruence half = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  PairAlgebra pa = pair_algebra(z4, half);
  Congruence d = delta(z4, pa, half, half);
  CHECK(d.num_blocks() == 4);
  for (int p = 0; p < pa.size(); ++p)
    for (int s = 0; s < pa.size(); ++s) {
      auto [a, b] = pa.pairs[p];
      auto [c, dd] = pa.pairs[s];
      bool expect = half.related(a, c) && dd == ((b - a + c) % 4 + 4) % 4;
      CHECK(d.related(p, s) == expect);
    }
  Congruence d1 = delta(z4, pa, half, Partition::total(4));
  int diag = pa.at(0, 0);
  for (int u = 0; u < 4; ++u) CHECK(d1.related(diag, pa.at(u, u)));
  CHECK(delta(z4, pair_algebra(z4, Partition::equality(4)), Partition::equality(4), Partition::equality(4))
            .is_equality());
  CHECK(hat_alpha(pa, half).num_blocks() == 2);
}

TEST_CASE("Delta constructions agree on every congruence pair of small groups") {
  for (const char* name : {"S3", "D4", "Q8", "Z2xZ4"}) {
    const FiniteAlgebra& g = catalog_group(name);
    auto cons = all_congruences(g);
    for (const auto& a : cons) {
      PairAlgebra pa = pair_algebra(g, a);
      for (const auto& b : cons) CHECK(delta_from_matrices(g, pa, a, b) == delta_from_diagonals(pa, b));
    }
  }
}

TEST_CASE("TC commutator equals the group commutator on catalog groups") {
  for (const auto& g : group_catalog()) {
    auto cons = all_congruences(g);
    for (const auto& a : cons)
      for (const auto& b : cons) CHECK_MESSAGE(tc_commutator(g, a, b) == group_commutator(g, a, b), g.name());
  }
}

TEST_CASE("abelian and central congruences") {
  FiniteAlgebra z4 = cyclic_group(4);
  Congruence half = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(is_abelian(z4, Partition::total(4)));
  CHECK(is_abelian(z4, half));
  CHECK(is_right_central(z4, half));
  CHECK(is_left_central(z4, half));
  FiniteAlgebra d4 = dihedral_group(4);
  Congruence all = Partition::total(8);
  Congruence derived = tc_commutator(d4, all, all);
  CHECK(derived.num_blocks() == 4);
  CHECK(is_right_central(d4, derived));
  CHECK(is_left_central(d4, derived));
  CHECK_FALSE(is_abelian(d4, all));
  CHECK_FALSE(is_right_central(d4, all));
  Report r = abelian_report(d4, all);
  CHECK_FALSE(r.holds);
  CHECK(r.witness.contains("matrix"));
  CHECK(is_abelian(d4, Partition::equality(8)));
  CHECK_FALSE(is_abelian(test::semilattice(2), Partition::total(2)));
}

TEST_CASE("lower central series") {
  auto d4 = lower_central_series(dihedral_group(4), 3);
  CHECK(d4[0].num_blocks() == 4);
  CHECK(d4[1].is_equality());
  auto s3 = lower_central_series(symmetric_group3(), 3);
  CHECK(s3[0].num_blocks() == 2);
  CHECK(s3[2] == s3[0]);
}

TEST_CASE("difference term checks") {
  std::vector<FiniteAlgebra> fam{cyclic_group(4), symmetric_group3(), dihedral_group(4)};
  std::vector<std::vector<Congruence>> th;
  for (const auto& g : fam) th.push_back(all_congruences(g));
  Term m = parse_term("(mul x0 (mul (inv x1) x2))");
  CHECK(verify_difference_term(fam, m, th, DifferenceScope::difference).holds);
  CHECK(verify_difference_term(fam, m, th, DifferenceScope::weak).holds);
  CHECK_FALSE(verify_difference_term(fam, parse_term("(mul x0 x2)"), th, DifferenceScope::difference).holds);
  CHECK_THROWS_AS(verify_difference_term({cyclic_group(4)}, parse_term("(mul x0 x3)"), {{}},
                                         DifferenceScope::difference),
                  InputError);

  // semilattices: [1,1] = 1, so x0 passes modulo the commutator but is not Mal'cev on the block
  FiniteAlgebra sl = test::semilattice(2);
  Report r = verify_difference_term({sl}, parse_term("x0"), {{Partition::total(2)}}, DifferenceScope::weak);
  CHECK(r.holds);
  CHECK(r.details["malcev_on_blocks"][0]["malcev_on_blocks"] == false);
}

TEST_CASE("ternary abelian group operation on blocks") {
  FiniteAlgebra z4 = cyclic_group(4);
  Table m = term_table(z4, group_malcev_term(), 3);
  Congruence half = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(verify_ternary_abelian_group_on_blocks(4, m, half).holds);
  CHECK(verify_ternary_abelian_group_on_blocks(4, m, Partition::total(4)).holds);
  Table proj = term_table(z4, parse_term("x0"), 3);
  CHECK_FALSE(verify_ternary_abelian_group_on_blocks(4, proj, half).holds);
  CHECK(verify_ternary_abelian_group_on_blocks(4, proj, Partition::equality(4)).holds);
  FiniteAlgebra s3 = symmetric_group3();
  Table ms = term_table(s3, group_malcev_term(), 3);
  CHECK_FALSE(verify_ternary_abelian_group_on_blocks(6, ms, Partition::total(6)).holds);
  FiniteAlgebra z8 = cyclic_group(8);
  CHECK(verify_ternary_abelian_group_on_blocks(8, term_table(z8, group_malcev_term(), 3), Partition::total(8)).holds);
}
