#include "ua/commutator.hpp"

namespace ua {

Congruence tc_commutator(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta) {
  const int n = alg.size();
  const auto matrices = m_matrices(alg, alpha, beta);
  Congruence delta = Partition::equality(n);
  while (true) {
    PairList add;
    for (auto code : matrices) {
      auto q = decode_quad(code, n);
      if (delta.related(q[0], q[1]) && !delta.related(q[2], q[3])) add.emplace_back(q[2], q[3]);
    }
    if (add.empty()) return delta;
    delta = cg(alg, delta, add);
  }
}

const Congruence& CommutatorCache::get(const Congruence& alpha, const Congruence& beta) {
  auto key = std::make_pair(alpha, beta);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, tc_commutator(*alg_, alpha, beta)).first;
  return it->second;
}

bool is_abelian(const FiniteAlgebra& alg, const Congruence& alpha) {
  return tc_commutator(alg, alpha, alpha).is_equality();
}

bool is_right_central(const FiniteAlgebra& alg, const Congruence& alpha) {
  return tc_commutator(alg, Partition::total(alg.size()), alpha).is_equality();
}

bool is_left_central(const FiniteAlgebra& alg, const Congruence& alpha) {
  return tc_commutator(alg, alpha, Partition::total(alg.size())).is_equality();
}

namespace {

Report term_condition_report(const FiniteAlgebra& alg, const Congruence& a, const Congruence& b,
                             std::string claim) {
  Report r{std::move(claim)};
  const int n = alg.size();
  for (auto code : m_matrices(alg, a, b)) {
    auto q = decode_quad(code, n);
    if (q[0] == q[1] && q[2] != q[3]) {
      r.fail(Json{{"matrix", {{q[0], q[1]}, {q[2], q[3]}}}});
      break;
    }
  }
  return r;
}

}  // namespace

Report abelian_report(const FiniteAlgebra& alg, const Congruence& alpha) {
  return term_condition_report(alg, alpha, alpha, "[alpha,alpha] = 0");
}

Report central_report(const FiniteAlgebra& alg, const Congruence& alpha) {
  Report r = term_condition_report(alg, Partition::total(alg.size()), alpha, "[1,alpha] = 0");
  Report l = term_condition_report(alg, alpha, Partition::total(alg.size()), "[alpha,1] = 0");
  r.details = Json{{"right_central", r.holds}, {"left_central", l.holds}};
  return r;
}

std::vector<Congruence> lower_central_series(const FiniteAlgebra& alg, int depth) {
  const Congruence one = Partition::total(alg.size());
  std::vector<Congruence> out;
  Congruence cur = one;
  for (int k = 0; k < depth; ++k) {
    cur = tc_commutator(alg, one, cur);
    out.push_back(cur);
  }
  return out;
}

Report verify_difference_term(const std::vector<FiniteAlgebra>& family, const Term& t,
                              const std::vector<std::vector<Congruence>>& thetas, DifferenceScope scope) {
  Report r{scope == DifferenceScope::difference ? "difference term" : "weak difference term"};
  if (thetas.size() != family.size()) throw InputError("verify_difference_term: one congruence list per algebra");
  Json blocks = Json::array();
  auto m = [&](const FiniteAlgebra& a, int x, int y, int z) {
    std::vector<int> env{x, y, z};
    return eval_term(a, t, env);
  };
  for (std::size_t i = 0; i < family.size(); ++i) {
    const FiniteAlgebra& a = family[i];
    check_term(a.signature(), t);
    if (t.num_vars() > 3) throw InputError("difference term must be ternary");
    const int n = a.size();
    if (scope == DifferenceScope::difference) {
      for (int x = 0; x < n && r.holds; ++x)
        for (int y = 0; y < n && r.holds; ++y)
          if (m(a, x, y, y) != x)
            r.fail(Json{{"algebra", a.name()}, {"failure", "t(x,y,y) != x"}, {"x", x}, {"y", y}});
    }
    for (const auto& theta : thetas[i]) {
      Congruence c = tc_commutator(a, theta, theta);
      bool malcev = true;
      for (auto [x, y] : theta.pairs()) {
        if (m(a, x, y, y) != x || m(a, y, y, x) != x) malcev = false;
        if (!c.related(m(a, y, y, x), x))
          r.fail(Json{{"algebra", a.name()}, {"failure", "t(y,y,x) not [theta,theta]-related to x"},
                      {"x", x}, {"y", y}, {"theta", theta.blocks()}});
        if (scope == DifferenceScope::weak && !c.related(m(a, x, y, y), x))
          r.fail(Json{{"algebra", a.name()}, {"failure", "t(x,y,y) not [theta,theta]-related to x"},
                      {"x", x}, {"y", y}, {"theta", theta.blocks()}});
      }
      blocks.push_back(Json{{"algebra", a.name()}, {"theta", theta.blocks()}, {"malcev_on_blocks", malcev}});
    }
  }
  r.details = Json{{"malcev_on_blocks", blocks}};
  return r;
}

Report verify_ternary_abelian_group_on_blocks(int n, const Table& m, const Partition& alpha) {
  Report r{"ternary abelian group operation on each block"};
  if (m.size() != checked_pow(n, 3) || alpha.n() != n) throw InputError("ternary table or partition has wrong size");
  auto M = [&](int x, int y, int z) { return m[(static_cast<std::size_t>(x) * n + y) * n + z]; };
  for (const auto& b : alpha.blocks()) {
    const int s = static_cast<int>(b.size());
    for (int x : b)
      for (int y : b) {
        if (M(x, y, y) != x || M(y, y, x) != x) {
          r.fail(Json{{"failure", "not Mal'cev"}, {"x", x}, {"y", y}});
          return r;
        }
        for (int z : b)
          if (!alpha.related(M(x, y, z), x)) {
            r.fail(Json{{"failure", "block not closed"}, {"args", {x, y, z}}});
            return r;
          }
      }
    if (checked_pow(s, 9) <= (std::size_t{1} << 20)) {
      bool ok = true;
      for_each_tuple(s, 9, [&](const std::vector<int>& v) {
        if (!ok) return;
        auto e = [&](int i) { return b[v[i]]; };
        int lhs = M(M(e(0), e(1), e(2)), M(e(3), e(4), e(5)), M(e(6), e(7), e(8)));
        int rhs = M(M(e(0), e(3), e(6)), M(e(1), e(4), e(7)), M(e(2), e(5), e(8)));
        if (lhs != rhs) {
          ok = false;
          std::vector<int> args;
          for (int i = 0; i < 9; ++i) args.push_back(e(i));
          r.fail(Json{{"failure", "not self-commuting"}, {"args", args}});
        }
      });
      if (!ok) return r;
    } else {
      // Mal'cev + affine over x + y = m(x, a, y) is equivalent to self-commuting
      const int a = b[0];
      auto add = [&](int x, int y) { return M(x, a, y); };
      auto neg = [&](int y) { return M(a, y, a); };
      for (int x : b)
        for (int y : b) {
          if (add(x, y) != add(y, x)) {
            r.fail(Json{{"failure", "block addition not commutative"}, {"x", x}, {"y", y}});
            return r;
          }
          for (int z : b)
            if (add(add(x, y), z) != add(x, add(y, z)) || M(x, y, z) != add(add(x, neg(y)), z)) {
              r.fail(Json{{"failure", "block operation not affine"}, {"args", {x, y, z}}});
              return r;
            }
        }
    }
  }
  return r;
}

}  // namespace ua
