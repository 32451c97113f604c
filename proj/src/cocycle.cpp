#include "ua/cocycle.hpp"

#include "search.hpp"

namespace ua {

using detail::for_each_choice;
using detail::product_size;

TwoCocycle zero_cocycle(const AffineDatum& d) {
  TwoCocycle T;
  T.tables.resize(d.signature().size());
  for (int f = 0; f < d.signature().size(); ++f) {
    T.tables[f].assign(checked_pow(d.nq(), d.arity(f)), 0);
    for_each_tuple(d.nq(), d.arity(f), [&](const std::vector<int>& qs) {
      T.tables[f][encode_tuple(qs, d.nq())] = d.zero(d.q_apply(f, qs));
    });
  }
  return T;
}

std::vector<int> derived_values(const AffineDatum& d, const CellReader& T, const Term& t, std::span<const int> qs) {
  std::vector<int> out;
  if (t.is_variable()) return out;
  const int f = d.signature().index_of(t.op);
  const int ar = d.arity(f);
  std::vector<int> qv(ar);
  for (int k = 0; k < ar; ++k) qv[k] = eval_term(d.Q, t.args[k], qs);
  out.push_back(T(f, encode_tuple(qv, d.nq())));
  for (int k = 0; k < ar; ++k) {
    if (t.args[k].is_variable()) continue;
    for (int mu : derived_values(d, T, t.args[k], qs))
      out.push_back(k == 0 ? d.fdelta(f, mu, std::span<const int>(qv).subspan(1)) : d.act(f, k, qv, mu));
  }
  return out;
}

int partial_derivative(const AffineDatum& d, const CellReader& T, const Term& t, std::span<const int> qs) {
  const int q = eval_term(d.Q, t, qs);
  auto vals = derived_values(d, T, t, qs);
  if (vals.empty()) return d.zero(q);
  int acc = vals[0];
  for (std::size_t i = 1; i < vals.size(); ++i) acc = d.add(q, acc, vals[i]);
  return acc;
}

int partial_derivative(const AffineDatum& d, const TwoCocycle& T, const Term& t, std::span<const int> qs) {
  return partial_derivative(d, [&](int f, std::size_t cell) { return T.tables[f][cell]; }, t, qs);
}

Report check_fiber_condition(const AffineDatum& d, const TwoCocycle& T) {
  Report r("C1: T_f(q) lies in the fiber over f^Q(q)");
  if (static_cast<int>(T.tables.size()) != d.signature().size()) {
    r.fail(Json{{"failure", "cocycle table count differs from signature"}});
    return r;
  }
  for (int f = 0; f < d.signature().size() && r.holds; ++f) {
    if (T.tables[f].size() != checked_pow(d.nq(), d.arity(f))) {
      r.fail(Json{{"symbol", d.signature()[f].name}, {"failure", "table size"}});
      break;
    }
    for_each_tuple(d.nq(), d.arity(f), [&](const std::vector<int>& qs) {
      int v = T.tables[f][encode_tuple(qs, d.nq())];
      if (r.holds && (v < 0 || v >= d.nc() || d.class_fiber[v] != d.q_apply(f, qs)))
        r.fail(Json{{"symbol", d.signature()[f].name}, {"q", qs}, {"value", v}});
    });
  }
  return r;
}

Report check_cocycle(const AffineDatum& d, const TwoCocycle& T, const std::vector<Equation>& sigma) {
  Report c1 = check_fiber_condition(d, T);
  Report r("T is a 2-cocycle compatible with the equations");
  if (!c1.holds) {
    r.fail(Json{{"condition", "C1"}, {"detail", c1.witness}});
    return r;
  }
  for (const auto& eq : sigma) {
    check_term(d.signature(), eq.lhs);
    check_term(d.signature(), eq.rhs);
    if (auto bad = find_counterexample(d.Q, eq)) {
      r.fail(Json{{"condition", "C2"}, {"equation", eq.str()}, {"failure", "Q does not satisfy the equation"},
                  {"q", *bad}});
      return r;
    }
    for_each_tuple(d.nq(), eq.num_vars(), [&](const std::vector<int>& qs) {
      if (!r.holds) return;
      int a = partial_derivative(d, T, eq.lhs, qs), b = partial_derivative(d, T, eq.rhs, qs);
      if (a != b) r.fail(Json{{"condition", "C2"}, {"equation", eq.str()}, {"q", qs}, {"lhs", a}, {"rhs", b}});
    });
    if (!r.holds) return r;
  }
  return r;
}

Extension reconstruct(const AffineDatum& d, const TwoCocycle& T) {
  Report c1 = check_fiber_condition(d, T);
  if (!c1.holds) throw PropertyError("cocycle violates the fiber condition", c1.witness);
  const int nc = d.nc(), nq = d.nq();
  std::vector<Table> tables;
  std::vector<int> qs;
  for (int f = 0; f < d.signature().size(); ++f) {
    const int ar = d.arity(f);
    Table t(checked_pow(nc, ar));
    if (ar == 0) {
      int u = d.q_apply(f, {});
      t[0] = d.add(u, d.f_delta[f][0], T.tables[f][0]);
    } else {
      qs.resize(ar);
      for_each_tuple(nc, ar, [&](const std::vector<int>& xs) {
        for (int i = 0; i < ar; ++i) qs[i] = d.class_fiber[xs[i]];
        int u = d.q_apply(f, qs);
        int acc = d.fdelta(f, xs[0], std::span<const int>(qs).subspan(1));
        for (int i = 1; i < ar; ++i) acc = d.add(u, acc, d.act(f, i, qs, xs[i]));
        acc = d.add(u, acc, T.tables[f][encode_tuple(qs, nq)]);
        t[encode_tuple(xs, nc)] = acc;
      });
    }
    tables.push_back(std::move(t));
  }
  Extension e;
  e.B = FiniteAlgebra("A_T", nc, d.signature(), std::move(tables));
  e.Q = d.Q;
  e.pi = d.class_fiber;
  e.beta = Partition::from_labels(d.class_fiber);
  e.lift = d.zero_class;
  e.m = d.dq.algebra.table(0);
  if (!is_homomorphism(e.B, e.Q, e.pi)) throw std::logic_error("reconstruct: projection is not a homomorphism");
  return e;
}

Report check_realization(const Extension& ext, const AffineDatum& d, std::size_t cap) {
  Report r("extension realizes the datum");
  if (!ext.Q.same_tables(d.Q)) {
    r.fail(Json{{"failure", "quotient differs from the datum's Q"}});
    return r;
  }
  DeltaQuotient dqB = delta_quotient(ext.B, ext.beta, ext.beta);
  const int nq = d.nq(), nc = d.nc();
  if (dqB.num_classes() != nc) {
    r.fail(Json{{"failure", "class counts differ"}, {"extension", dqB.num_classes()}, {"datum", nc}});
    return r;
  }
  std::vector<std::vector<int>> bfiber(nq);
  for (int c = 0; c < nc; ++c) bfiber[ext.pi[dqB.top(c)]].push_back(c);
  for (int q = 0; q < nq; ++q)
    if (bfiber[q].size() != d.fiber[q].size()) {
      r.fail(Json{{"failure", "fiber sizes differ"}, {"q", q}});
      return r;
    }

  // per fiber: all bijections onto the datum's fiber
  std::vector<std::vector<std::vector<int>>> perms(nq);
  std::vector<std::size_t> sizes;
  for (int q = 0; q < nq; ++q) {
    std::vector<int> p = d.fiber[q];
    do perms[q].push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    sizes.push_back(perms[q].size());
  }
  std::vector<std::vector<int>> lifts(nq);
  for (int x = 0; x < ext.B.size(); ++x) lifts[ext.pi[x]].push_back(x);
  for (int q = 0; q < nq; ++q) sizes.push_back(lifts[q].size());
  product_size(sizes, cap, "check_realization");

  const Signature& sig = d.signature();
  std::vector<int> iota(nc), args;
  bool found = false;
  std::vector<int> lift_found;
  for_each_choice(lifts, [&](const std::vector<int>& l) {
    std::vector<int> diagB(nq);
    for (int q = 0; q < nq; ++q) diagB[q] = dqB.diag(l[q]);
    std::vector<std::vector<int>> choice_idx(nq);
    for (int q = 0; q < nq; ++q)
      for (std::size_t i = 0; i < perms[q].size(); ++i) choice_idx[q].push_back(static_cast<int>(i));
    for_each_choice(choice_idx, [&](const std::vector<int>& pick) {
      for (int q = 0; q < nq; ++q)
        for (std::size_t j = 0; j < bfiber[q].size(); ++j) iota[bfiber[q][j]] = perms[q][pick[q]][j];
      bool ok = true;
      for (int f = 0; f < sig.size() && ok; ++f) {
        const int ar = sig[f].arity;
        if (ar == 0) {
          ok = d.f_delta[f][0] == iota[dqB.algebra.table(f)[0]];
        } else if (ar == 1) {
          for (int x = 0; x < nc && ok; ++x) ok = d.fdelta(f, iota[x], {}) == iota[dqB.algebra.apply(f, {x})];
        } else {
          for (int pos = 0; pos < ar && ok; ++pos)
            for_each_tuple(nq, ar - 1, [&](const std::vector<int>& rest) {
              if (!ok) return;
              std::vector<int> qs(rest);
              qs.insert(qs.begin() + pos, 0);
              for (int x = 0; x < nc && ok; ++x) {
                args.clear();
                for (int j = 0; j < ar; ++j) args.push_back(j == pos ? x : diagB[qs[j]]);
                ok = d.act(f, pos, qs, iota[x]) == iota[dqB.algebra.apply(f, args)];
              }
            });
        }
      }
      if (ok) {
        found = true;
        lift_found = l;
      }
      return !ok;
    });
    return !found;
  });
  if (found)
    r.details = Json{{"bijection", iota}, {"lifting", lift_found}};
  else
    r.fail(Json{{"failure", "no fiber-preserving bijection and lifting satisfy R1/R2"}});
  return r;
}

std::optional<std::vector<int>> find_retraction(const Extension& ext, std::size_t cap) {
  const int nq = ext.Q.size();
  std::vector<std::vector<int>> blocks(nq);
  std::vector<std::size_t> sizes;
  for (int x = 0; x < ext.B.size(); ++x) blocks[ext.pi[x]].push_back(x);
  for (const auto& b : blocks) sizes.push_back(b.size());
  product_size(sizes, cap, "find_retraction");
  std::optional<std::vector<int>> out;
  for_each_choice(blocks, [&](const std::vector<int>& l) {
    if (!is_homomorphism(ext.Q, ext.B, l)) return true;
    std::vector<int> r(ext.B.size());
    for (int x = 0; x < ext.B.size(); ++x) r[x] = l[ext.pi[x]];
    out = r;
    return false;
  });
  return out;
}

std::optional<std::vector<int>> is_semidirect(const Extension& ext, std::size_t cap) {
  return find_retraction(ext, cap);
}

std::optional<std::vector<int>> find_retraction_direct(const Extension& ext, std::size_t cap) {
  const int n = ext.B.size();
  std::vector<std::vector<int>> all(n);
  for (auto& v : all)
    for (int x = 0; x < n; ++x) v.push_back(x);
  product_size(std::vector<std::size_t>(n, n), cap, "find_retraction_direct");
  std::optional<std::vector<int>> out;
  for_each_choice(all, [&](const std::vector<int>& r) {
    for (int x = 0; x < n; ++x) {
      if (r[r[x]] != r[x]) return true;
      for (int y = 0; y < n; ++y)
        if ((r[x] == r[y]) != ext.beta.related(x, y)) return true;
    }
    if (!is_homomorphism(ext.B, ext.B, r)) return true;
    out = r;
    return false;
  });
  return out;
}

FiniteAlgebra tensor_product(const FiniteAlgebra& B, const FiniteAlgebra& Q, const Table& plus,
                             const std::vector<Table>& transfers, std::string name) {
  if (!(B.signature() == Q.signature())) throw InputError("tensor_product: signatures differ");
  const int nb = B.size(), nq = Q.size(), n = nb * nq;
  if (plus.size() != checked_pow(nb, 2)) throw InputError("tensor_product: plus table has wrong size");
  if (static_cast<int>(transfers.size()) != B.num_ops()) throw InputError("tensor_product: one transfer per symbol");
  std::vector<Table> tables;
  std::vector<int> xs, bs, qs;
  for (int f = 0; f < B.num_ops(); ++f) {
    const int ar = B.arity(f);
    if (transfers[f].size() != checked_pow(nq, ar)) throw InputError("tensor_product: transfer table has wrong size");
    Table t(checked_pow(n, ar));
    xs.resize(ar);
    bs.resize(ar);
    qs.resize(ar);
    for (std::size_t c = 0; c < t.size(); ++c) {
      decode_tuple(c, n, xs);
      for (int i = 0; i < ar; ++i) {
        bs[i] = xs[i] / nq;
        qs[i] = xs[i] % nq;
      }
      int tv = transfers[f][encode_tuple(qs, nq)];
      if (tv < 0 || tv >= nb) throw InputError("tensor_product: transfer value out of range");
      t[c] = plus[B.apply(f, bs) * nb + tv] * nq + Q.apply(f, qs);
    }
    tables.push_back(std::move(t));
  }
  if (name.empty()) name = B.name() + "(x)" + Q.name();
  return FiniteAlgebra(std::move(name), n, B.signature(), std::move(tables));
}

namespace {

template <class Op>
TwoCocycle pointwise(const AffineDatum& d, const TwoCocycle& a, const TwoCocycle* b, Op op) {
  TwoCocycle out = a;
  for (int f = 0; f < d.signature().size(); ++f)
    for_each_tuple(d.nq(), d.arity(f), [&](const std::vector<int>& qs) {
      std::size_t cell = encode_tuple(qs, d.nq());
      int u = d.q_apply(f, qs);
      out.tables[f][cell] = op(u, a.tables[f][cell], b ? b->tables[f][cell] : 0);
    });
  return out;
}

}  // namespace

TwoCocycle cocycle_add(const AffineDatum& d, const TwoCocycle& a, const TwoCocycle& b) {
  return pointwise(d, a, &b, [&](int u, int x, int y) { return d.add(u, x, y); });
}

TwoCocycle cocycle_sub(const AffineDatum& d, const TwoCocycle& a, const TwoCocycle& b) {
  return pointwise(d, a, &b, [&](int u, int x, int y) { return d.sub(u, x, y); });
}

TwoCocycle cocycle_neg(const AffineDatum& d, const TwoCocycle& a) {
  return pointwise(d, a, nullptr, [&](int u, int x, int) { return d.neg(u, x); });
}

TwoCocycle coboundary(const AffineDatum& d, std::span<const int> h) {
  if (static_cast<int>(h.size()) != d.nq()) throw InputError("coboundary: h has wrong length");
  for (int q = 0; q < d.nq(); ++q)
    if (h[q] < 0 || h[q] >= d.nc() || d.class_fiber[h[q]] != q)
      throw InputError("coboundary: h does not respect fibers");
  TwoCocycle G;
  G.tables.resize(d.signature().size());
  for (int f = 0; f < d.signature().size(); ++f) {
    const int ar = d.arity(f);
    G.tables[f].assign(checked_pow(d.nq(), ar), 0);
    for_each_tuple(d.nq(), ar, [&](const std::vector<int>& xs) {
      int u = d.q_apply(f, xs);
      int acc;
      if (ar == 0) {
        acc = d.sub(u, d.f_delta[f][0], h[u]);
      } else {
        acc = d.fdelta(f, h[xs[0]], std::span<const int>(xs).subspan(1));
        acc = d.sub(u, acc, h[u]);
        for (int i = 1; i < ar; ++i) acc = d.add(u, acc, d.act(f, i, xs, h[xs[i]]));
      }
      G.tables[f][encode_tuple(xs, d.nq())] = acc;
    });
  }
  return G;
}

std::size_t fiber_section_count(const AffineDatum& d, std::size_t cap) {
  std::vector<std::size_t> sizes;
  for (const auto& f : d.fiber) sizes.push_back(f.size());
  return product_size(sizes, cap, "fiber sections");
}

void for_each_fiber_section(const AffineDatum& d, const std::function<bool(const std::vector<int>&)>& f) {
  for_each_choice(d.fiber, f);
}

std::optional<std::vector<int>> cocycle_difference_coboundary(const AffineDatum& d, const TwoCocycle& T,
                                                              const TwoCocycle& T2, std::size_t cap) {
  fiber_section_count(d, cap);
  TwoCocycle diff = cocycle_sub(d, T2, T);
  std::optional<std::vector<int>> out;
  for_each_fiber_section(d, [&](const std::vector<int>& h) {
    if (coboundary(d, h) == diff) {
      out = h;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace ua
