#include "ua/congruence.hpp"

#include <set>

namespace ua {

Congruence cg(const FiniteAlgebra& alg, const Partition& base, const PairList& pairs) {
  const int n = alg.size();
  if (base.n() != n) throw InputError("cg: base partition has wrong size");
  UnionFind uf(n);
  PairList work;
  auto join = [&](int a, int b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (int i = 0; i < n; ++i) join(i, base.rep(i));
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("cg: pair element out of range");
    join(a, b);
  }
  std::vector<int> args;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int op = 0; op < alg.num_ops(); ++op) {
      const int ar = alg.arity(op);
      for (int pos = 0; pos < ar; ++pos) {
        for_each_tuple(n, ar - 1, [&](const std::vector<int>& ctx) {
          args.assign(ctx.begin(), ctx.begin() + pos);
          args.push_back(a);
          args.insert(args.end(), ctx.begin() + pos, ctx.end());
          int fa = alg.apply(op, args);
          args[pos] = b;
          join(fa, alg.apply(op, args));
        });
      }
    }
  }
  return Partition::from_union_find(uf);
}

Congruence cg(const FiniteAlgebra& alg, const PairList& pairs) {
  return cg(alg, Partition::equality(alg.size()), pairs);
}

bool is_congruence(const FiniteAlgebra& alg, const Partition& theta) {
  return theta.n() == alg.size() && !compatibility_failure(alg, theta);
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& alg, std::size_t cap) {
  const int n = alg.size();
  std::set<Congruence> principal;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) principal.insert(cg(alg, {{a, b}}));
  std::set<Congruence> all{Partition::equality(n)};
  std::vector<Congruence> frontier{Partition::equality(n)};
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& t : frontier)
      for (const auto& p : principal) {
        Congruence j = t.join(p);
        if (all.insert(j).second) {
          if (all.size() > cap) throw CapExceeded("congruence lattice larger than cap");
          next.push_back(j);
        }
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

PairAlgebra pair_algebra(const FiniteAlgebra& alg, const Congruence& alpha) {
  PairAlgebra pa;
  pa.n = alg.size();
  pa.index.assign(static_cast<std::size_t>(pa.n) * pa.n, -1);
  for (int a = 0; a < pa.n; ++a)
    for (int b = 0; b < pa.n; ++b)
      if (alpha.related(a, b)) {
        pa.index[static_cast<std::size_t>(a) * pa.n + b] = static_cast<int>(pa.pairs.size());
        pa.pairs.emplace_back(a, b);
      }
  const int m = pa.size();
  std::vector<Table> tables;
  std::vector<int> idx, tops, bots;
  for (int op = 0; op < alg.num_ops(); ++op) {
    int ar = alg.arity(op);
    Table t(checked_pow(m, ar));
    idx.resize(ar);
    tops.resize(ar);
    bots.resize(ar);
    for (std::size_t c = 0; c < t.size(); ++c) {
      decode_tuple(c, m, idx);
      for (int j = 0; j < ar; ++j) {
        tops[j] = pa.top(idx[j]);
        bots[j] = pa.bottom(idx[j]);
      }
      int r = pa.at(alg.apply(op, tops), alg.apply(op, bots));
      if (r < 0) throw InputError("pair algebra: alpha is not compatible with " + alg.signature()[op].name);
      t[c] = r;
    }
    tables.push_back(std::move(t));
  }
  pa.algebra = FiniteAlgebra(alg.name() + "(alpha)", m, alg.signature(), std::move(tables));
  return pa;
}

std::vector<std::uint32_t> m_matrices(const FiniteAlgebra& alg, const Congruence& alpha,
                                      const Congruence& beta) {
  const int n = alg.size();
  std::vector<std::uint32_t> gens;
  for (auto [x, y] : alpha.pairs()) gens.push_back(encode_quad(x, x, y, y, n));
  for (auto [u, v] : beta.pairs()) gens.push_back(encode_quad(u, v, u, v, n));
  return generate_tuples(alg, 4, gens);
}

Congruence delta_from_matrices(const FiniteAlgebra& alg, const PairAlgebra& pa,
                               const Congruence& alpha, const Congruence& beta) {
  UnionFind uf(pa.size());
  for (auto code : m_matrices(alg, alpha, beta)) {
    auto q = decode_quad(code, alg.size());
    int left = pa.at(q[0], q[2]), right = pa.at(q[1], q[3]);
    if (left < 0 || right < 0) throw std::logic_error("M(alpha,beta) column outside alpha");
    uf.unite(left, right);
  }
  return Partition::from_union_find(uf);
}

Congruence delta_from_diagonals(const PairAlgebra& pa, const Congruence& beta) {
  PairList gens;
  for (auto [u, v] : beta.pairs())
    if (u < v) gens.emplace_back(pa.at(u, u), pa.at(v, v));
  return cg(pa.algebra, gens);
}

Congruence delta(const FiniteAlgebra& alg, const PairAlgebra& pa, const Congruence& alpha,
                 const Congruence& beta) {
  Congruence d1 = delta_from_matrices(alg, pa, alpha, beta);
  Congruence d2 = delta_from_diagonals(pa, beta);
  if (!(d1 == d2)) throw std::logic_error("Delta: matrix closure and diagonal generation disagree");
  return d1;
}

Partition hat_alpha(const PairAlgebra& pa, const Congruence& alpha) {
  std::vector<int> labels(pa.size());
  for (int p = 0; p < pa.size(); ++p) labels[p] = alpha.rep(pa.top(p));
  return Partition::from_labels(labels);
}

Partition projection_kernel(const PairAlgebra& pa, int i) {
  std::vector<int> labels(pa.size());
  for (int p = 0; p < pa.size(); ++p) labels[p] = i == 0 ? pa.top(p) : pa.bottom(p);
  return Partition::from_labels(labels);
}

Partition projection_preimage(const PairAlgebra& pa, int i, const Congruence& beta) {
  std::vector<int> labels(pa.size());
  for (int p = 0; p < pa.size(); ++p) labels[p] = beta.rep(i == 0 ? pa.top(p) : pa.bottom(p));
  return Partition::from_labels(labels);
}

int DeltaQuotient::cls(int a, int b) const {
  int p = pa.at(a, b);
  if (p < 0)
    throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not in alpha");
  return class_of[p];
}

DeltaQuotient delta_quotient(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta) {
  DeltaQuotient dq;
  dq.pa = pair_algebra(alg, alpha);
  dq.delta = delta(alg, dq.pa, alpha, beta);
  Quotient q = quotient_algebra(dq.pa.algebra, dq.delta);
  dq.algebra = std::move(q.algebra);
  dq.algebra.set_name(alg.name() + "(alpha)/Delta");
  dq.class_of = std::move(q.map);
  dq.rep = std::move(q.reps);
  return dq;
}

}  // namespace ua
