#include "ua/laws.hpp"

#include <set>

namespace ua {

namespace {

Congruence one_of(const FiniteAlgebra& alg) { return Partition::total(alg.size()); }

}  // namespace

Report check_delta_one_abelian(const FiniteAlgebra& alg, const Congruence& alpha) {
  Report r("A(alpha)/Delta_{alpha 1} is abelian");
  DeltaQuotient dq = delta_quotient(alg, alpha, one_of(alg));
  Report ab = abelian_report(dq.algebra, Partition::total(dq.num_classes()));
  if (!ab.holds) r.fail(ab.witness);
  r.details = Json{{"classes", dq.num_classes()}};
  return r;
}

Report check_trace_embedding(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta,
                             const Congruence& sigma) {
  Report r("x/[alpha,beta] -> ([r(x) // x], x/sigma) is injective");
  if (!sigma.leq(alpha)) throw InputError("trace embedding: sigma must lie below alpha");
  Congruence comm = tc_commutator(alg, alpha, beta);
  DeltaQuotient dq = delta_quotient(alg, alpha, beta);
  const int n = alg.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool same = sigma.related(x, y) && dq.cls(sigma.rep(x), x) == dq.cls(sigma.rep(y), y);
      if (same && !comm.related(x, y)) {
        r.fail(Json{{"x", x}, {"y", y}});
        return r;
      }
    }
  return r;
}

Report check_delta_same_top(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta) {
  Report r("[a // b] Delta [a // d] implies b [alpha,beta] d");
  Congruence comm = tc_commutator(alg, alpha, beta);
  DeltaQuotient dq = delta_quotient(alg, alpha, beta);
  const int n = alg.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!alpha.related(a, b)) continue;
      for (int d = 0; d < n; ++d)
        if (alpha.related(a, d) && dq.cls(a, b) == dq.cls(a, d) && !comm.related(b, d)) {
          r.fail(Json{{"a", a}, {"b", b}, {"d", d}});
          return r;
        }
    }
  return r;
}

Report check_delta_same_top_abelian(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta) {
  Report r("some [a // b] Delta [a // d] iff b [beta,alpha] d");
  Congruence comm = tc_commutator(alg, beta, alpha);
  DeltaQuotient dq = delta_quotient(alg, alpha, beta);
  const int n = alg.size();
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      bool some = false;
      for (int a = 0; a < n && !some; ++a)
        some = alpha.related(a, b) && alpha.related(a, d) && dq.cls(a, b) == dq.cls(a, d);
      if (some != comm.related(b, d)) {
        r.fail(Json{{"b", b}, {"d", d}, {"delta", some}});
        return r;
      }
    }
  return r;
}

Report check_delta_meet(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& gamma) {
  Report r("Delta_{alpha alpha} = Delta_{alpha gamma} meet alpha-hat");
  if (!alpha.leq(gamma) || !tc_commutator(alg, gamma, alpha).is_equality())
    throw InputError("delta meet: need alpha <= gamma and [gamma, alpha] = 0");
  PairAlgebra pa = pair_algebra(alg, alpha);
  Congruence aa = delta(alg, pa, alpha, alpha);
  Congruence ag = delta(alg, pa, alpha, gamma);
  Congruence meet = ag.meet(hat_alpha(pa, alpha));
  if (!(aa == meet)) {
    for (int p = 0; p < pa.size(); ++p)
      for (int q = 0; q < pa.size(); ++q)
        if (aa.related(p, q) != meet.related(p, q) && r.holds)
          r.fail(Json{{"pair", pa.pairs[p]}, {"pair2", pa.pairs[q]}, {"delta_alpha_alpha", aa.related(p, q)}});
  }
  return r;
}

Report check_delta_descriptions(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta,
                                const Term& d) {
  Report r("three descriptions of Delta_{alpha beta} agree");
  const int n = alg.size();
  Table m = term_table(alg, d, 3);
  Congruence comm = tc_commutator(alg, alpha, beta);
  DeltaQuotient dq = delta_quotient(alg, alpha, beta);
  const PairAlgebra& pa = dq.pa;
  auto cls = [&](int a, int b) { return pa.at(a, b) < 0 ? -1 : dq.class_of[pa.at(a, b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!alpha.related(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        const int mv = m[(static_cast<std::size_t>(b) * n + a) * n + c];
        for (int e = 0; e < n; ++e) {
          bool A = cls(c, e) >= 0 && cls(a, b) == cls(c, e);
          bool B = cls(c, mv) >= 0 && cls(a, b) == cls(c, mv) && comm.related(e, mv);
          bool C = beta.related(c, a) && comm.related(e, mv);
          if (A != B || B != C) {
            r.fail(Json{{"a", a}, {"b", b}, {"c", c}, {"d", e}, {"conditions", {A, B, C}}});
            return r;
          }
        }
      }
    }
  return r;
}

Report check_diagonal_class(const FiniteAlgebra& alg, const Congruence& alpha, const Term& d) {
  Report r("[u // u] and [a // d(a,b,b)] share a Delta_{alpha 1} class");
  const int n = alg.size();
  Table m = term_table(alg, d, 3);
  DeltaQuotient dq = delta_quotient(alg, alpha, one_of(alg));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!alpha.related(a, b)) continue;
      int v = m[(static_cast<std::size_t>(a) * n + b) * n + b];
      for (int u = 0; u < n; ++u)
        if (!alpha.related(a, v) || dq.cls(u, u) != dq.cls(a, v)) {
          r.fail(Json{{"a", a}, {"b", b}, {"u", u}});
          return r;
        }
    }
  return r;
}

Report check_delta_one_quotient(const FiniteAlgebra& alg, const Congruence& alpha) {
  Report r("A/[alpha,1](alpha/[alpha,1])/Delta = A(alpha)/Delta_{alpha 1}");
  Congruence c = tc_commutator(alg, alpha, one_of(alg));
  Quotient qt = quotient_algebra(alg, c);
  std::vector<int> label;
  for (int rep : qt.reps) label.push_back(qt.map[alpha.rep(rep)]);
  Congruence alpha2 = Partition::from_labels(label);
  DeltaQuotient small = delta_quotient(qt.algebra, alpha2, Partition::total(qt.algebra.size()));
  DeltaQuotient big = delta_quotient(alg, alpha, one_of(alg));
  std::vector<int> phi(big.num_classes(), -1);
  for (int p = 0; p < big.pa.size(); ++p) {
    auto [a, b] = big.pa.pairs[p];
    int v = small.cls(qt.map[a], qt.map[b]);
    int& s = phi[big.class_of[p]];
    if (s >= 0 && s != v) {
      r.fail(Json{{"failure", "map not well defined"}, {"pair", big.pa.pairs[p]}});
      return r;
    }
    s = v;
  }
  std::set<int> img(phi.begin(), phi.end());
  if (static_cast<int>(img.size()) != small.num_classes() || big.num_classes() != small.num_classes() ||
      !is_homomorphism(big.algebra, small.algebra, phi))
    r.fail(Json{{"failure", "induced map is not an isomorphism"}, {"classes", {big.num_classes(), small.num_classes()}}});
  return r;
}

Report check_tensor_right_central(const FiniteAlgebra& B, const FiniteAlgebra& Q, const Term& m, int zero,
                                  const std::vector<Table>& transfers) {
  Report r("[1, ker q] = 0 in B (x)^T Q");
  const int nb = B.size(), nq = Q.size();
  Table mt = term_table(B, m, 3);
  Table plus(static_cast<std::size_t>(nb) * nb);
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y) plus[x * nb + y] = mt[(static_cast<std::size_t>(x) * nb + zero) * nb + y];
  FiniteAlgebra P = tensor_product(B, Q, plus, transfers);
  std::vector<int> label(P.size());
  for (int x = 0; x < P.size(); ++x) label[x] = x % nq;
  Report c = central_report(P, Partition::from_labels(label));
  r.details = Json{{"B_abelian", is_abelian(B, Partition::total(nb))}, {"central", c.details}};
  if (!is_right_central(P, Partition::from_labels(label))) r.fail(c.witness);
  return r;
}

ExtensionDecomposition decompose_extension(const FiniteAlgebra& alg, const Congruence& alpha, const Term& d) {
  ExtensionDecomposition out;
  const Congruence one = one_of(alg);
  DeltaQuotient dq = delta_quotient(alg, alpha, one);
  Quotient qt = quotient_algebra(alg, alpha);
  const int nk = dq.num_classes(), nq = qt.algebra.size();
  out.kernel_part = dq.algebra;
  out.kernel_part.set_name("A(alpha)/Delta_{alpha 1}");
  out.quotient_part = qt.algebra;

  const int zero = dq.diag(0);
  Table mk = term_table(dq.algebra, d, 3);
  out.plus.resize(static_cast<std::size_t>(nk) * nk);
  for (int x = 0; x < nk; ++x)
    for (int y = 0; y < nk; ++y) out.plus[x * nk + y] = mk[(static_cast<std::size_t>(x) * nk + zero) * nk + y];

  std::vector<int> xs;
  for (int f = 0; f < alg.num_ops(); ++f) {
    const int ar = alg.arity(f);
    Table t(checked_pow(nq, ar));
    xs.resize(ar);
    for_each_tuple(nq, ar, [&](const std::vector<int>& qs) {
      for (int i = 0; i < ar; ++i) xs[i] = qt.reps[qs[i]];
      int v = alg.apply(f, xs);
      t[encode_tuple(qs, nq)] = dq.cls(qt.reps[qt.map[v]], v);
    });
    out.transfers.push_back(std::move(t));
  }
  out.product = tensor_product(out.kernel_part, out.quotient_part, out.plus, out.transfers, alg.name() + "_decomposed");

  const int n = alg.size();
  out.psi.resize(n);
  for (int x = 0; x < n; ++x) out.psi[x] = dq.cls(qt.reps[qt.map[x]], x) * nq + qt.map[x];

  Report& r = out.report;
  r.claim = "A/[alpha,1] = A(alpha)/Delta_{alpha 1} (x)^T A/alpha";
  Congruence comm = tc_commutator(alg, alpha, one);
  for (int x = 0; x < n && r.holds; ++x)
    for (int y = 0; y < n && r.holds; ++y)
      if ((out.psi[x] == out.psi[y]) != comm.related(x, y)) r.fail(Json{{"failure", "kernel of psi"}, {"x", x}, {"y", y}});
  std::set<int> img(out.psi.begin(), out.psi.end());
  if (r.holds && static_cast<int>(img.size()) != out.product.size())
    r.fail(Json{{"failure", "psi is not surjective"}, {"image", img.size()}, {"product", out.product.size()}});
  if (r.holds && !is_homomorphism(alg, out.product, out.psi)) r.fail(Json{{"failure", "psi is not a homomorphism"}});
  r.details = Json{{"kernel_part", nk}, {"quotient_part", nq}, {"kernel_abelian", is_abelian(dq.algebra, Partition::total(nk))}};
  return out;
}

NilpotentDecomposition decompose_nilpotent(const FiniteAlgebra& alg, int steps, const Term& d) {
  if (steps < 1) throw InputError("decompose_nilpotent: steps must be positive");
  NilpotentDecomposition out;
  out.report.claim = "right-associated product of abelian factors";
  auto series = lower_central_series(alg, steps);
  if (!series.back().is_equality()) {
    out.report.fail(Json{{"failure", "not nilpotent of this step"}, {"steps", steps}});
    return out;
  }
  if (steps == 1) {
    out.factors = {alg};
    out.product = alg;
    out.iso.resize(alg.size());
    for (int x = 0; x < alg.size(); ++x) out.iso[x] = x;
    return out;
  }
  // [1]_{steps-1} is central
  ExtensionDecomposition ext = decompose_extension(alg, series[steps - 2], d);
  if (!ext.report.holds) {
    out.report.fail(ext.report.witness);
    return out;
  }
  NilpotentDecomposition rest = decompose_nilpotent(ext.quotient_part, steps - 1, d);
  if (!rest.report.holds) {
    out.report.fail(rest.report.witness);
    return out;
  }
  const int nq = ext.quotient_part.size(), np = rest.product.size();
  std::vector<int> inv(np);
  for (int q = 0; q < nq; ++q) inv[rest.iso[q]] = q;
  std::vector<Table> transfers;
  std::vector<int> qs;
  for (int f = 0; f < alg.num_ops(); ++f) {
    const int ar = alg.arity(f);
    Table t(checked_pow(np, ar));
    qs.resize(ar);
    for_each_tuple(np, ar, [&](const std::vector<int>& ps) {
      for (int i = 0; i < ar; ++i) qs[i] = inv[ps[i]];
      t[encode_tuple(ps, np)] = ext.transfers[f][encode_tuple(qs, nq)];
    });
    transfers.push_back(std::move(t));
  }
  out.factors = rest.factors;
  out.factors.push_back(ext.kernel_part);
  out.product = tensor_product(ext.kernel_part, rest.product, ext.plus, transfers, alg.name() + "_product");
  out.iso.resize(alg.size());
  for (int x = 0; x < alg.size(); ++x) out.iso[x] = (ext.psi[x] / nq) * np + rest.iso[ext.psi[x] % nq];
  std::set<int> img(out.iso.begin(), out.iso.end());
  if (static_cast<int>(img.size()) != alg.size() || out.product.size() != alg.size() ||
      !is_homomorphism(alg, out.product, out.iso))
    out.report.fail(Json{{"failure", "product map is not an isomorphism"}});
  Json abelian = Json::array();
  for (const auto& q : out.factors) abelian.push_back(is_abelian(q, Partition::total(q.size())));
  out.report.details = Json{{"factor_sizes", Json::array()}, {"factors_abelian", abelian}};
  for (const auto& q : out.factors) out.report.details["factor_sizes"].push_back(q.size());
  for (const auto& a : abelian)
    if (!a.get<bool>() && out.report.holds) out.report.fail(Json{{"failure", "a factor is not abelian"}});
  return out;
}

Report check_product_nilpotent(const FiniteAlgebra& product, int steps) {
  Report r("[1]_k = 0 in the product");
  auto series = lower_central_series(product, steps);
  Json sizes = Json::array();
  for (const auto& c : series) sizes.push_back(c.num_blocks());
  r.details = Json{{"series_blocks", sizes}};
  if (!series.back().is_equality()) r.fail(Json{{"steps", steps}, {"series_blocks", sizes}});
  return r;
}

}  // namespace ua
