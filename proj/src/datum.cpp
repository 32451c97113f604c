#include "ua/datum.hpp"

#include <sstream>

namespace ua {

std::vector<int> Extension::trace() const {
  std::vector<int> r(B.size());
  for (int x = 0; x < B.size(); ++x) r[x] = lift[pi[x]];
  return r;
}

Extension make_extension(const FiniteAlgebra& B, const Congruence& beta, std::vector<int> lift, Table m) {
  Quotient q = quotient_algebra(B, beta);
  Extension e;
  e.B = B;
  e.Q = std::move(q.algebra);
  e.Q.set_name(B.name() + "/beta");
  e.pi = std::move(q.map);
  e.beta = beta;
  if (lift.empty()) lift = q.reps;
  if (static_cast<int>(lift.size()) != e.Q.size()) throw InputError("lifting has wrong length");
  for (int i = 0; i < e.Q.size(); ++i)
    if (lift[i] < 0 || lift[i] >= B.size() || e.pi[lift[i]] != i)
      throw InputError("lifting does not map block " + std::to_string(i) + " into itself");
  e.lift = std::move(lift);
  if (!m.empty() && m.size() != checked_pow(B.size(), 3)) throw InputError("m table has wrong size");
  e.m = std::move(m);
  return e;
}

std::vector<int> parse_lifting(const Extension& ext, const std::string& text) {
  std::vector<int> lift = ext.lift;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("lifting entry '" + item + "' is not q:a");
    int q, a;
    try {
      q = std::stoi(item.substr(0, colon));
      a = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("lifting entry '" + item + "' is not q:a");
    }
    if (q < 0 || q >= ext.Q.size() || a < 0 || a >= ext.B.size() || ext.pi[a] != q)
      throw InputError("lifting entry '" + item + "' does not pick an element of block q");
    lift[q] = a;
  }
  return lift;
}

void AffineDatum::finalize() {
  class_fiber.assign(nc(), -1);
  for (int c = 0; c < nc(); ++c) class_fiber[c] = rho[dq.rep[c]];
  fiber.assign(nq(), {});
  for (int c = 0; c < nc(); ++c) fiber[class_fiber[c]].push_back(c);
  zero_class.assign(nq(), -1);
  for (int q = 0; q < nq(); ++q) zero_class[q] = dq.diag(lift[q]);
}

int AffineDatum::plus_u(int x, int u, int y) const {
  int q = block_of(u);
  if (class_fiber[x] != q || class_fiber[y] != q)
    throw std::invalid_argument("plus_u: arguments lie in different alpha-hat blocks");
  return m3(x, delta_of(u), y);
}

std::size_t AffineDatum::f_delta_index(int f, int cls, std::span<const int> rest) const {
  if (arity(f) == 0) return 0;
  std::size_t idx = cls;
  for (int q : rest) idx = idx * nq() + q;
  return idx;
}

std::size_t AffineDatum::action_index(int f, int pos, std::span<const int> qs, int cls) const {
  std::size_t idx = 0;
  for (int j = 0; j < arity(f); ++j) idx = j == pos ? idx * nc() + cls : idx * nq() + qs[j];
  return idx;
}

Extraction extract_datum(const Extension& ext, const Term& m) {
  if (m.num_vars() > 3) throw InputError("m must be a ternary term");
  return extract_datum(ext, term_table(ext.B, m, 3));
}

Extraction extract_datum(const Extension& ext, const Table& m) {
  const FiniteAlgebra& B = ext.B;
  const int n = B.size();
  if (m.size() != checked_pow(n, 3)) throw InputError("m table has wrong size");
  Extraction out;
  AffineDatum& d = out.datum;
  d.A = FiniteAlgebra(B.name() + "[m]", n, Signature({{"m", 3}}), {m});
  if (!is_congruence(d.A, ext.beta)) throw PropertyError("beta is not compatible with m", Json());
  Report ab = abelian_report(B, ext.beta);
  if (!ab.holds) throw PropertyError("beta is not abelian", ab.witness);
  Report tern = verify_ternary_abelian_group_on_blocks(n, m, ext.beta);
  if (!tern.holds) throw PropertyError("m is not a ternary abelian group operation on the blocks", tern.witness);

  DeltaQuotient dqB = delta_quotient(B, ext.beta, ext.beta);
  d.dq = delta_quotient(d.A, ext.beta, ext.beta);
  if (!(d.dq.delta == dqB.delta)) throw PropertyError("Delta of B is not determined by m", Json());

  d.Q = ext.Q;
  d.alpha = ext.beta;
  d.lift = ext.lift;
  const int nq = d.Q.size();
  d.q_m.assign(checked_pow(nq, 3), 0);
  for_each_tuple(nq, 3, [&](const std::vector<int>& q) {
    int v = ext.pi[m[(static_cast<std::size_t>(ext.lift[q[0]]) * n + ext.lift[q[1]]) * n + ext.lift[q[2]]]];
    d.q_m[(static_cast<std::size_t>(q[0]) * nq + q[1]) * nq + q[2]] = v;
  });
  d.rho.resize(d.dq.pa.size());
  for (int p = 0; p < d.dq.pa.size(); ++p) d.rho[p] = ext.pi[d.dq.pa.top(p)];

  const FiniteAlgebra& cl = dqB.algebra;
  const int nc = d.dq.num_classes();
  const int nops = B.num_ops();
  d.f_delta.resize(nops);
  d.action.assign(nops, {});
  std::vector<int> args;
  for (int f = 0; f < nops; ++f) {
    const int ar = B.arity(f);
    if (ar == 0) {
      d.f_delta[f] = {cl.table(f)[0]};
      continue;
    }
    d.f_delta[f].assign(nc * checked_pow(nq, ar - 1), 0);
    for (int c = 0; c < nc; ++c)
      for_each_tuple(nq, ar - 1, [&](const std::vector<int>& rest) {
        args.assign(1, c);
        for (int q : rest) args.push_back(d.dq.diag(ext.lift[q]));
        d.f_delta[f][c * checked_pow(nq, ar - 1) + encode_tuple(rest, nq)] = cl.apply(f, args);
      });
    if (ar < 2) continue;
    d.action[f].resize(ar);
    for (int pos = 0; pos < ar; ++pos) {
      Table& t = d.action[f][pos];
      t.assign(nc * checked_pow(nq, ar - 1), 0);
      for (int c = 0; c < nc; ++c)
        for_each_tuple(nq, ar - 1, [&](const std::vector<int>& rest) {
          args.clear();
          std::vector<int> qs;
          for (int j = 0, r = 0; j < ar; ++j) {
            if (j == pos) {
              args.push_back(c);
              qs.push_back(0);
            } else {
              args.push_back(d.dq.diag(ext.lift[rest[r]]));
              qs.push_back(rest[r++]);
            }
          }
          std::size_t idx = 0;
          for (int j = 0; j < ar; ++j) idx = j == pos ? idx * nc + c : idx * nq + qs[j];
          t[idx] = cl.apply(f, args);
        });
    }
  }
  d.finalize();

  out.cocycle.tables.resize(nops);
  std::vector<int> lifted;
  for (int f = 0; f < nops; ++f) {
    const int ar = B.arity(f);
    Table& t = out.cocycle.tables[f];
    t.assign(checked_pow(nq, ar), 0);
    for_each_tuple(nq, ar, [&](const std::vector<int>& qs) {
      lifted.clear();
      for (int q : qs) lifted.push_back(ext.lift[q]);
      t[encode_tuple(qs, nq)] = d.dq.cls(ext.lift[d.Q.apply(f, qs)], B.apply(f, lifted));
    });
  }
  auto r = ext.trace();
  out.phi.resize(n);
  for (int x = 0; x < n; ++x) out.phi[x] = d.dq.cls(r[x], x);
  return out;
}

bool all_hold(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

namespace {

std::vector<int> with_at(std::span<const int> qs, int pos, int v) {
  std::vector<int> out(qs.begin(), qs.end());
  out.insert(out.begin() + pos, v);
  return out;
}

}  // namespace

std::vector<Report> validate_datum(const AffineDatum& d) {
  std::vector<Report> out;
  const int nq = d.nq(), nc = d.nc();
  const Signature& sig = d.signature();

  Report d2("D2: Q is an algebra of the datum signature");
  if (static_cast<int>(d.f_delta.size()) != sig.size() || static_cast<int>(d.action.size()) != sig.size())
    d2.fail(Json{{"failure", "table count differs from signature"}});
  for (int f = 0; f < sig.size() && d2.holds; ++f) {
    std::size_t want = sig[f].arity == 0 ? 1 : nc * checked_pow(nq, sig[f].arity - 1);
    if (d.f_delta[f].size() != want) d2.fail(Json{{"symbol", sig[f].name}, {"failure", "f_delta size"}});
    for (int v : d.f_delta[f])
      if (v < 0 || v >= nc) d2.fail(Json{{"symbol", sig[f].name}, {"failure", "f_delta value out of range"}});
    if (sig[f].arity >= 2 && static_cast<int>(d.action[f].size()) != sig[f].arity)
      d2.fail(Json{{"symbol", sig[f].name}, {"failure", "action must be unary at every position"}});
  }
  out.push_back(d2);
  if (!d2.holds) return out;

  Report d1("D1: f_delta is homomorphic in its first argument");
  for (int f = 0; f < sig.size() && d1.holds; ++f) {
    const int ar = sig[f].arity;
    if (ar == 0) continue;
    for (int q1 = 0; q1 < nq && d1.holds; ++q1)
      for_each_tuple(nq, ar - 1, [&](const std::vector<int>& rest) {
        if (!d1.holds) return;
        int v = d.q_apply(f, with_at(rest, 0, q1));
        for (int a : d.fiber[q1])
          for (int b : d.fiber[q1]) {
            int lhs = d.fdelta(f, d.add(q1, a, b), rest);
            int rhs = d.add(v, d.fdelta(f, a, rest), d.fdelta(f, b, rest));
            if (lhs != rhs && d1.holds)
              d1.fail(Json{{"symbol", sig[f].name}, {"a", a}, {"b", b}, {"rest", rest}, {"lhs", lhs}, {"rhs", rhs}});
          }
      });
  }
  out.push_back(d1);

  Report d3("D3: m idempotent on Q and rho a surjective homomorphism with kernel alpha-hat");
  for (int q = 0; q < nq; ++q)
    if (d.q_m[(static_cast<std::size_t>(q) * nq + q) * nq + q] != q) d3.fail(Json{{"failure", "m not idempotent"}, {"q", q}});
  const PairAlgebra& pa = d.dq.pa;
  if (static_cast<int>(d.rho.size()) != pa.size()) {
    d3.fail(Json{{"failure", "rho has wrong length"}});
  } else {
    for_each_tuple(pa.size(), 3, [&](const std::vector<int>& p) {
      if (!d3.holds) return;
      int lhs = d.rho[pa.algebra.apply(0, p)];
      int rhs = d.q_m[(static_cast<std::size_t>(d.rho[p[0]]) * nq + d.rho[p[1]]) * nq + d.rho[p[2]]];
      if (lhs != rhs) d3.fail(Json{{"failure", "rho not a homomorphism"}, {"pairs", p}});
    });
    std::vector<char> hit(nq, 0);
    for (int v : d.rho)
      if (v >= 0 && v < nq) hit[v] = 1;
    for (int q = 0; q < nq; ++q)
      if (!hit[q]) d3.fail(Json{{"failure", "rho not surjective"}, {"missing", q}});
    if (d3.holds && !(Partition::from_labels(d.rho) == hat_alpha(pa, d.alpha)))
      d3.fail(Json{{"failure", "ker rho differs from alpha-hat"}});
  }
  out.push_back(d3);
  if (!d3.holds) return out;

  Report d4("D4: the action is homomorphic and fiber-compatible with f_delta");
  for (int f = 0; f < sig.size() && d4.holds; ++f) {
    const int ar = sig[f].arity;
    if (ar == 0) continue;
    for (int c = 0; c < nc; ++c)
      for_each_tuple(nq, ar - 1, [&](const std::vector<int>& rest) {
        auto qs = with_at(rest, 0, d.class_fiber[c]);
        if (d.class_fiber[d.fdelta(f, c, rest)] != d.q_apply(f, qs) && d4.holds)
          d4.fail(Json{{"symbol", sig[f].name}, {"failure", "f_delta leaves the fiber"}, {"class", c}});
      });
    if (ar < 2) continue;
    for (int pos = 0; pos < ar && d4.holds; ++pos)
      for_each_tuple(nq, ar - 1, [&](const std::vector<int>& rest) {
        if (!d4.holds) return;
        for (int w = 0; w < nq; ++w) {
          auto qs = with_at(rest, pos, w);
          int v = d.q_apply(f, qs);
          for (int a : d.fiber[w]) {
            if (d.class_fiber[d.act(f, pos, qs, a)] != v && d4.holds)
              d4.fail(Json{{"symbol", sig[f].name}, {"position", pos + 1}, {"failure", "action leaves the fiber"}});
            for (int b : d.fiber[w]) {
              int lhs = d.act(f, pos, qs, d.add(w, a, b));
              int rhs = d.add(v, d.act(f, pos, qs, a), d.act(f, pos, qs, b));
              if (lhs != rhs && d4.holds)
                d4.fail(Json{{"symbol", sig[f].name}, {"position", pos + 1}, {"failure", "action not homomorphic"},
                             {"a", a}, {"b", b}});
            }
          }
        }
      });
  }
  out.push_back(d4);

  Report ad1("AD1: alpha abelian in <A,m> and m a ternary abelian group operation on blocks");
  Report ab = abelian_report(d.A, d.alpha);
  if (!ab.holds) ad1.fail(ab.witness);
  Report tern = verify_ternary_abelian_group_on_blocks(d.A.size(), d.A.table(0), d.alpha);
  if (!tern.holds) ad1.fail(tern.witness);
  out.push_back(ad1);

  Report ad2("AD2: the action is unary and agrees with f_delta at the first position");
  for (int f = 0; f < sig.size() && ad2.holds; ++f) {
    if (sig[f].arity < 2) continue;
    for (int c = 0; c < nc; ++c)
      for_each_tuple(nq, sig[f].arity - 1, [&](const std::vector<int>& rest) {
        auto qs = with_at(rest, 0, 0);
        if (d.fdelta(f, c, rest) != d.act(f, 0, qs, c) && ad2.holds)
          ad2.fail(Json{{"symbol", sig[f].name}, {"class", c}, {"rest", rest}});
      });
  }
  out.push_back(ad2);

  Report lf("lifting: rho(delta(l(q))) = q and rho o delta is the canonical map");
  for (int q = 0; q < nq; ++q)
    if (d.class_fiber[d.zero(q)] != q) lf.fail(Json{{"failure", "lifting leaves its block"}, {"q", q}});
  for (int a = 0; a < d.A.size(); ++a)
    for (int b = 0; b < d.A.size(); ++b)
      if ((d.block_of(a) == d.block_of(b)) != d.alpha.related(a, b) && lf.holds)
        lf.fail(Json{{"failure", "rho o delta is not the canonical map"}, {"a", a}, {"b", b}});
  out.push_back(lf);
  return out;
}

namespace {

void contributions(const AffineDatum& d, const Term& t, std::span<const int> env, std::span<const int> qenv,
                   std::vector<int>& out) {
  if (t.is_variable()) {
    out.push_back(env[t.var]);
    return;
  }
  const int f = d.signature().index_of(t.op);
  const int ar = d.arity(f);
  std::vector<int> qv(ar);
  for (int k = 0; k < ar; ++k) qv[k] = eval_term(d.Q, t.args[k], qenv);
  std::vector<int> sub;
  for (int k = 0; k < ar; ++k) {
    sub.clear();
    contributions(d, t.args[k], env, qenv, sub);
    for (int c : sub)
      out.push_back(k == 0 ? d.fdelta(f, c, std::span<const int>(qv).subspan(1)) : d.act(f, k, qv, c));
  }
}

// Value of the Q-or-class evaluation used for full compatibility.
struct Tagged {
  bool is_class;
  int v;
  bool operator==(const Tagged&) const = default;
};

std::optional<Tagged> star_eval(const AffineDatum& d, const Term& t, std::span<const Tagged> env) {
  if (t.is_variable()) return env[t.var];
  const int f = d.signature().index_of(t.op);
  const int ar = d.arity(f);
  std::vector<Tagged> a;
  for (const auto& s : t.args) {
    auto v = star_eval(d, s, env);
    if (!v) return std::nullopt;
    a.push_back(*v);
  }
  int classes = 0, last = -1;
  for (int k = 0; k < ar; ++k)
    if (a[k].is_class) ++classes, last = k;
  std::vector<int> qs(ar);
  for (int k = 0; k < ar; ++k) qs[k] = a[k].is_class ? d.class_fiber[a[k].v] : a[k].v;
  if (classes == 0) return Tagged{false, d.q_apply(f, qs)};
  if (ar == 1) return Tagged{true, d.fdelta(f, a[0].v, {})};
  if (classes == 1) return Tagged{true, d.act(f, last, qs, a[last].v)};
  if (classes == ar) {
    for (int k = 1; k < ar; ++k)
      if (a[k].v != d.zero(qs[k])) return std::nullopt;
    return Tagged{true, d.fdelta(f, a[0].v, std::span<const int>(qs).subspan(1))};
  }
  return std::nullopt;
}

}  // namespace

int semidirect_expansion(const AffineDatum& d, const Term& t, std::span<const int> env) {
  std::vector<int> qenv;
  for (int c : env) qenv.push_back(d.class_fiber[c]);
  const int q = eval_term(d.Q, t, qenv);
  std::vector<int> parts;
  contributions(d, t, env, qenv, parts);
  if (parts.empty()) return d.zero(q);
  int acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = d.add(q, acc, parts[i]);
  return acc;
}

Report check_action_compatible(const AffineDatum& d, const std::vector<Equation>& sigma, CompatMode mode) {
  Report r(mode == CompatMode::weak ? "action weakly compatible with the equations"
                                    : "action compatible with the equations");
  std::size_t compared = 0, skipped = 0;
  for (const auto& eq : sigma) {
    check_term(d.signature(), eq.lhs);
    check_term(d.signature(), eq.rhs);
    if (auto bad = find_counterexample(d.Q, eq)) {
      r.fail(Json{{"equation", eq.str()}, {"failure", "Q does not satisfy the equation"}, {"q", *bad}});
      continue;
    }
    const int k = eq.num_vars();
    if (mode == CompatMode::weak) {
      for_each_tuple(d.nc(), k, [&](const std::vector<int>& env) {
        int a = semidirect_expansion(d, eq.lhs, env), b = semidirect_expansion(d, eq.rhs, env);
        ++compared;
        if (a != b) r.fail(Json{{"equation", eq.str()}, {"classes", env}, {"lhs", a}, {"rhs", b}});
      });
    } else {
      // each variable ranges over Q followed by the classes
      const int nv = d.nq() + d.nc();
      std::vector<Tagged> env(k);
      for_each_tuple(nv, k, [&](const std::vector<int>& code) {
        for (int i = 0; i < k; ++i)
          env[i] = code[i] < d.nq() ? Tagged{false, code[i]} : Tagged{true, code[i] - d.nq()};
        auto a = star_eval(d, eq.lhs, env), b = star_eval(d, eq.rhs, env);
        if (!a || !b || a->is_class != b->is_class) {
          ++skipped;
          return;
        }
        ++compared;
        if (!(*a == *b)) r.fail(Json{{"equation", eq.str()}, {"assignment", code}, {"lhs", a->v}, {"rhs", b->v}});
      });
    }
  }
  r.details = Json{{"compared", compared}, {"not_appropriate", skipped}};
  return r;
}

}  // namespace ua
