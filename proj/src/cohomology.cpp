#include "ua/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "search.hpp"

namespace ua {

using detail::for_each_choice;
using detail::product_size;

namespace {

struct CellSpace {
  std::vector<std::size_t> offset;  // per symbol
  std::vector<int> symbol;          // cell -> f
  std::vector<std::size_t> index;   // cell -> tuple code
  std::vector<int> target;          // cell -> f^Q of the tuple

  explicit CellSpace(const AffineDatum& d) {
    std::vector<int> qs;
    for (int f = 0; f < d.signature().size(); ++f) {
      offset.push_back(symbol.size());
      const std::size_t cells = checked_pow(d.nq(), d.arity(f));
      qs.resize(d.arity(f));
      for (std::size_t c = 0; c < cells; ++c) {
        decode_tuple(c, d.nq(), qs);
        symbol.push_back(f);
        index.push_back(c);
        target.push_back(d.q_apply(f, qs));
      }
    }
  }
  std::size_t size() const { return symbol.size(); }
  std::size_t id(int f, std::size_t c) const { return offset[f] + c; }

  TwoCocycle cocycle(const AffineDatum& d, const std::vector<int>& val) const {
    TwoCocycle T;
    T.tables.resize(d.signature().size());
    for (int f = 0; f < d.signature().size(); ++f) T.tables[f].assign(checked_pow(d.nq(), d.arity(f)), 0);
    for (std::size_t k = 0; k < size(); ++k) T.tables[symbol[k]][index[k]] = val[k];
    return T;
  }
};

struct Constraint {
  const Equation* eq;
  std::vector<int> qs;
  std::vector<std::size_t> deps;
};

bool gate_equations(const AffineDatum& d, const std::vector<Equation>& sigma) {
  for (const auto& eq : sigma) {
    check_term(d.signature(), eq.lhs);
    check_term(d.signature(), eq.rhs);
    if (find_counterexample(d.Q, eq)) return false;
  }
  return true;
}

std::vector<TwoCocycle> enumerate_propagate(const AffineDatum& d, const std::vector<Equation>& sigma,
                                            std::size_t cap) {
  const CellSpace cs(d);
  const std::size_t ncell = cs.size();
  std::vector<int> val(ncell);
  for (std::size_t k = 0; k < ncell; ++k) val[k] = d.fiber[cs.target[k]][0];

  std::vector<Constraint> cons;
  for (const auto& eq : sigma) {
    if (eq.lhs.str() == eq.rhs.str()) continue;
    bool dead = false;
    for_each_tuple(d.nq(), eq.num_vars(), [&](const std::vector<int>& qs) {
      if (dead) return;
      Constraint c{&eq, qs, {}};
      CellReader rec = [&](int f, std::size_t cell) {
        std::size_t k = cs.id(f, cell);
        c.deps.push_back(k);
        return val[k];
      };
      int a = partial_derivative(d, rec, eq.lhs, qs), b = partial_derivative(d, rec, eq.rhs, qs);
      std::sort(c.deps.begin(), c.deps.end());
      c.deps.erase(std::unique(c.deps.begin(), c.deps.end()), c.deps.end());
      if (c.deps.empty()) {
        dead = a != b;
        return;
      }
      cons.push_back(std::move(c));
    });
    if (dead) return {};
  }

  // cells in order of first use by the smallest constraints
  std::vector<std::size_t> by_size(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return cons[a].deps.size() < cons[b].deps.size(); });
  std::vector<std::size_t> order;
  std::vector<int> pos(ncell, -1);
  auto place = [&](std::size_t k) {
    if (pos[k] < 0) {
      pos[k] = static_cast<int>(order.size());
      order.push_back(k);
    }
  };
  for (std::size_t i : by_size)
    for (std::size_t k : cons[i].deps) place(k);
  for (std::size_t k = 0; k < ncell; ++k) place(k);
  std::vector<std::vector<std::size_t>> attached(ncell);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    int last = 0;
    for (std::size_t k : cons[i].deps) last = std::max(last, pos[k]);
    attached[last].push_back(i);
  }

  CellReader read = [&](int f, std::size_t cell) { return val[cs.id(f, cell)]; };
  auto satisfied = [&](const Constraint& c) {
    return partial_derivative(d, read, c.eq->lhs, c.qs) == partial_derivative(d, read, c.eq->rhs, c.qs);
  };

  std::vector<TwoCocycle> out;
  std::size_t nodes = 0;
  std::vector<std::size_t> choice(ncell, 0);
  std::size_t depth = 0;
  if (ncell == 0) {
    for (const auto& c : cons)
      if (!satisfied(c)) return {};
    out.push_back(cs.cocycle(d, val));
    return out;
  }
  // iterative backtracking over positions
  while (true) {
    const std::size_t k = order[depth];
    const auto& fib = d.fiber[cs.target[k]];
    if (choice[depth] == fib.size()) {
      choice[depth] = 0;
      if (depth == 0) break;
      --depth;
      ++choice[depth];
      continue;
    }
    if (++nodes > cap) throw CapExceeded("Z2 enumeration: node count exceeds cap");
    val[k] = fib[choice[depth]];
    bool ok = true;
    for (std::size_t i : attached[depth])
      if (!satisfied(cons[i])) {
        ok = false;
        break;
      }
    if (!ok) {
      ++choice[depth];
    } else if (depth + 1 == ncell) {
      out.push_back(cs.cocycle(d, val));
      ++choice[depth];
    } else {
      ++depth;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TwoCocycle> enumerate_brute(const AffineDatum& d, const std::vector<Equation>& sigma, std::size_t cap) {
  const CellSpace cs(d);
  std::vector<std::vector<int>> options;
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    options.push_back(d.fiber[cs.target[k]]);
    sizes.push_back(options.back().size());
  }
  product_size(sizes, cap, "Z2 brute force");
  std::vector<TwoCocycle> out;
  for_each_choice(options, [&](const std::vector<int>& val) {
    TwoCocycle T = cs.cocycle(d, val);
    if (check_cocycle(d, T, sigma).holds) out.push_back(std::move(T));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

CocycleGroup close_group(const AffineDatum& d, std::vector<TwoCocycle> elems, const char* what) {
  CocycleGroup g;
  g.elements = std::move(elems);
  const int n = static_cast<int>(g.elements.size());
  if (n == 0) return g;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = g.index_of(cocycle_add(d, g.elements[a], g.elements[b]));
      if (c < 0) throw std::logic_error(std::string(what) + " is not closed under addition");
      table[a * n + b] = c;
    }
  g.group = AbelianGroup(n, std::move(table));
  return g;
}

Json cocycle_json(const AffineDatum& d, const TwoCocycle& T) {
  Json j = Json::object();
  for (int f = 0; f < d.signature().size(); ++f) j[d.signature()[f].name] = T.tables[f];
  return j;
}

}  // namespace

std::vector<TwoCocycle> enumerate_cocycles(const AffineDatum& d, const std::vector<Equation>& sigma,
                                           std::size_t cap, Z2Mode mode) {
  if (!gate_equations(d, sigma)) return {};
  return mode == Z2Mode::propagate ? enumerate_propagate(d, sigma, cap) : enumerate_brute(d, sigma, cap);
}

int CocycleGroup::index_of(const TwoCocycle& T) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), T);
  return it != elements.end() && *it == T ? static_cast<int>(it - elements.begin()) : -1;
}

CocycleGroup cocycle_group(const AffineDatum& d, const std::vector<Equation>& sigma, std::size_t cap, Z2Mode mode) {
  return close_group(d, enumerate_cocycles(d, sigma, cap, mode), "Z2");
}

CoboundaryGroup coboundary_group(const AffineDatum& d, std::size_t cap) {
  fiber_section_count(d, cap);
  std::map<TwoCocycle, std::size_t> count;
  for_each_fiber_section(d, [&](const std::vector<int>& h) {
    ++count[coboundary(d, h)];
    return true;
  });
  CoboundaryGroup out;
  std::vector<TwoCocycle> elems;
  for (const auto& [G, k] : count) {
    elems.push_back(G);
    out.multiplicity.push_back(k);
  }
  out.b2 = close_group(d, std::move(elems), "B2");
  return out;
}

CohomologyResult h2(const AffineDatum& d, const std::vector<Equation>& sigma, const IsoNamer& namer,
                    std::size_t cap, Z2Mode mode) {
  CohomologyResult r;
  r.z2 = cocycle_group(d, sigma, cap, mode);
  r.b2 = coboundary_group(d);
  const int nz = static_cast<int>(r.z2.elements.size());
  if (nz == 0) return r;
  std::vector<int> shift;
  for (const auto& G : r.b2.b2.elements) {
    int i = r.z2.index_of(G);
    if (i < 0) throw PropertyError("a 2-coboundary fails C2: the equations do not contain the datum", cocycle_json(d, G));
    shift.push_back(i);
  }
  r.class_of.assign(nz, -1);
  for (int i = 0; i < nz; ++i) {
    if (r.class_of[i] >= 0) continue;
    const int c = static_cast<int>(r.reps.size());
    r.reps.push_back(i);
    for (int s : shift) r.class_of[r.z2.group.add(i, s)] = c;
  }
  const int nc = static_cast<int>(r.reps.size());
  std::vector<int> table(static_cast<std::size_t>(nc) * nc);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) table[a * nc + b] = r.class_of[r.z2.group.add(r.reps[a], r.reps[b])];
  r.h2 = AbelianGroup(nc, std::move(table));
  r.split_class = r.class_of[r.z2.index_of(zero_cocycle(d))];

  std::vector<FiniteAlgebra> seen;
  for (int c = 0; c < nc; ++c) {
    FiniteAlgebra B = reconstruct(d, r.z2.elements[r.reps[c]]).B;
    if (namer) {
      r.types.push_back(namer(B));
      continue;
    }
    std::size_t k = 0;
    while (k < seen.size() && !find_isomorphism(B, seen[k])) ++k;
    if (k == seen.size()) seen.push_back(B);
    r.types.push_back("type" + std::to_string(k));
  }
  return r;
}

bool are_equivalent(const AffineDatum& d, const TwoCocycle& T, const TwoCocycle& T2, std::size_t cap) {
  return cocycle_difference_coboundary(d, T, T2, cap).has_value();
}

namespace {

// every stabilized isomorphism a -> b; f returns false to stop
void for_each_stabilized(const Extension& a, const Extension& b, std::size_t cap,
                         const std::function<bool(const std::vector<int>&)>& f) {
  const int n = a.B.size(), nq = a.Q.size();
  if (a.m.empty()) throw InputError("stabilized isomorphism: the extension has no m table");
  if (b.B.size() != n || b.Q.size() != nq) return;
  std::vector<std::vector<int>> bfib(nq), afib(nq);
  for (int x = 0; x < n; ++x) {
    bfib[b.pi[x]].push_back(x);
    afib[a.pi[x]].push_back(x);
  }
  std::vector<std::size_t> sizes;
  for (const auto& v : bfib) sizes.push_back(v.size());
  product_size(sizes, cap, "stabilized isomorphism search");
  auto m = [&](int x, int y, int z) { return a.m[(static_cast<std::size_t>(x) * n + y) * n + z]; };
  const auto& l = a.lift;
  std::vector<int> gamma(n);
  for_each_choice(bfib, [&](const std::vector<int>& g) {
    for (int x = 0; x < n; ++x) gamma[x] = m(g[a.pi[x]], l[a.pi[x]], x);
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (b.pi[gamma[x]] != a.pi[x] || hit[gamma[x]]) return true;
      hit[gamma[x]] = 1;
      for (int y : afib[a.pi[x]])
        if (gamma[x] != m(gamma[y], y, x)) return true;
    }
    if (!is_homomorphism(a.B, b.B, gamma)) return true;
    return f(gamma);
  });
}

}  // namespace

std::optional<std::vector<int>> find_stabilized_isomorphism(const Extension& a, const Extension& b, std::size_t cap) {
  std::optional<std::vector<int>> out;
  for_each_stabilized(a, b, cap, [&](const std::vector<int>& g) {
    out = g;
    return false;
  });
  return out;
}

std::vector<std::vector<int>> stabilizers(const Extension& ext, std::size_t cap) {
  std::vector<std::vector<int>> out;
  for_each_stabilized(ext, ext, cap, [&](const std::vector<int>& g) {
    out.push_back(g);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_derivation(const AffineDatum& d, std::span<const int> h) {
  if (static_cast<int>(h.size()) != d.nq()) return false;
  for (int q = 0; q < d.nq(); ++q)
    if (h[q] < 0 || h[q] >= d.nc() || d.class_fiber[h[q]] != q) return false;
  bool ok = true;
  for (int f = 0; f < d.signature().size() && ok; ++f) {
    const int ar = d.arity(f);
    for_each_tuple(d.nq(), ar, [&](const std::vector<int>& xs) {
      if (!ok) return;
      int u = d.q_apply(f, xs);
      int acc;
      if (ar == 0) {
        acc = d.f_delta[f][0];
      } else {
        acc = d.fdelta(f, h[xs[0]], std::span<const int>(xs).subspan(1));
        for (int i = 1; i < ar; ++i) acc = d.add(u, acc, d.act(f, i, xs, h[xs[i]]));
      }
      ok = h[u] == acc;
    });
  }
  return ok;
}

std::vector<std::vector<int>> derivations(const AffineDatum& d, std::size_t cap) {
  fiber_section_count(d, cap);
  std::vector<std::vector<int>> out;
  for_each_fiber_section(d, [&](const std::vector<int>& h) {
    if (is_derivation(d, h)) out.push_back(h);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup derivation_group(const AffineDatum& d, const std::vector<std::vector<int>>& z1) {
  const int n = static_cast<int>(z1.size());
  if (n == 0) throw InputError("derivation_group: empty set");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> s(d.nq());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int q = 0; q < d.nq(); ++q) s[q] = d.add(q, z1[a][q], z1[b][q]);
      auto it = std::lower_bound(z1.begin(), z1.end(), s);
      if (it == z1.end() || *it != s) throw std::logic_error("Z1 is not closed under addition");
      table[a * n + b] = static_cast<int>(it - z1.begin());
    }
  return AbelianGroup(n, std::move(table));
}

std::vector<int> stabilizer_derivation(const std::vector<int>& phi, const std::vector<int>& lift,
                                       const std::vector<int>& gamma) {
  std::vector<int> out;
  for (int l : lift) out.push_back(phi[gamma[l]]);
  return out;
}

Report verify_stabilizer_correspondence(const Extension& ext, std::size_t cap) {
  Report r("gamma -> d_gamma is an isomorphism Stab(pi) -> Z1");
  if (ext.m.empty()) throw InputError("stabilizer correspondence: the extension has no m table");
  Extraction ex = extract_datum(ext, ext.m);
  const AffineDatum& d = ex.datum;
  auto stab = stabilizers(ext, cap);
  auto z1 = derivations(d, cap);
  Json details{{"stab_order", stab.size()}, {"z1_order", z1.size()}};
  if (!z1.empty()) details["z1_invariant_factors"] = derivation_group(d, z1).invariant_factors();
  r.details = details;

  std::vector<std::vector<int>> image;
  for (const auto& g : stab) {
    auto dg = stabilizer_derivation(ex.phi, ext.lift, g);
    if (!is_derivation(d, dg)) {
      r.fail(Json{{"failure", "d_gamma is not a derivation"}, {"gamma", g}, {"d_gamma", dg}});
      return r;
    }
    image.push_back(dg);
  }
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.fail(Json{{"failure", "gamma -> d_gamma is not injective"}});
    return r;
  }
  if (sorted != z1) {
    r.fail(Json{{"failure", "image differs from Z1"}, {"stab_order", stab.size()}, {"z1_order", z1.size()}});
    return r;
  }
  std::vector<int> id(ext.B.size());
  for (int x = 0; x < ext.B.size(); ++x) id[x] = x;
  auto idx = std::lower_bound(stab.begin(), stab.end(), id) - stab.begin();
  if (image[idx] != d.zero_class) {
    r.fail(Json{{"failure", "identity does not map to the zero derivation"}});
    return r;
  }
  std::vector<int> comp(ext.B.size()), sum(d.nq());
  for (std::size_t i = 0; i < stab.size(); ++i)
    for (std::size_t j = 0; j < stab.size(); ++j) {
      for (int x = 0; x < ext.B.size(); ++x) comp[x] = stab[j][stab[i][x]];
      auto it = std::lower_bound(stab.begin(), stab.end(), comp);
      if (it == stab.end() || *it != comp) {
        r.fail(Json{{"failure", "Stab not closed under composition"}, {"gamma", stab[i]}, {"gamma2", stab[j]}});
        return r;
      }
      for (int q = 0; q < d.nq(); ++q) sum[q] = d.add(q, image[j][q], image[i][q]);
      if (image[it - stab.begin()] != sum) {
        r.fail(Json{{"failure", "d of a composition is not the sum"}, {"gamma", stab[i]}, {"gamma2", stab[j]}});
        return r;
      }
    }
  return r;
}

H1Result h1(const AffineDatum& d, int depth_cap, std::size_t cap) {
  H1Result out;
  Extension S = reconstruct(d, zero_cocycle(d));
  const int n = S.B.size();
  const Signature& sig = S.B.signature();

  // (t(x, c), t(x, d')) for c related to d' as tuples of length 2n
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> all;
  auto insert = [&](std::vector<int> v) {
    if (seen.insert(v).second) {
      all.push_back(std::move(v));
      if (all.size() > cap) throw CapExceeded("h1: twin enumeration exceeds cap");
    }
  };
  {
    std::vector<int> id(2 * n);
    for (int x = 0; x < n; ++x) id[x] = id[n + x] = x;
    insert(id);
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e)
        if (S.pi[c] == S.pi[e]) {
          std::vector<int> v(2 * n);
          for (int x = 0; x < n; ++x) v[x] = c, v[n + x] = e;
          insert(v);
        }
  }
  std::size_t frontier = 0;
  int depth = 0;
  bool closed = false;
  std::vector<int> args;
  while (depth < depth_cap) {
    const std::size_t old = all.size();
    for (int f = 0; f < sig.size(); ++f) {
      const int ar = sig[f].arity;
      if (ar == 0) {
        if (depth > 0) continue;
        int c = S.B.apply(f, {});
        insert(std::vector<int>(2 * n, c));
        continue;
      }
      std::vector<std::size_t> idx(ar, 0);
      while (true) {
        bool fresh = false;
        for (auto i : idx) fresh = fresh || (i >= frontier && i < old);
        if (fresh) {
          std::vector<int> v(2 * n);
          args.resize(ar);
          for (int p = 0; p < 2 * n; ++p) {
            for (int k = 0; k < ar; ++k) args[k] = all[idx[k]][p];
            v[p] = S.B.apply(f, args);
          }
          insert(std::move(v));
        }
        int k = ar - 1;
        while (k >= 0 && ++idx[k] == old) idx[k--] = 0;
        if (k < 0) break;
      }
    }
    ++depth;
    frontier = old;
    if (all.size() == old) {
      closed = true;
      break;
    }
  }
  out.twin_pairs = all.size();
  out.exact = closed;
  out.depth = depth;

  auto stab = stabilizers(S, cap);
  out.z1 = derivations(d, cap);
  out.z1_group = derivation_group(d, out.z1);
  std::set<std::vector<int>> pstab;
  for (const auto& v : all) {
    bool twin = true, fixed = false;
    for (int x = 0; x < n; ++x) {
      twin = twin && v[n + x] == x;
      fixed = fixed || v[x] == x;
    }
    if (!twin || !fixed) continue;
    std::vector<int> g(v.begin(), v.begin() + n);
    if (std::binary_search(stab.begin(), stab.end(), g)) pstab.insert(g);
  }
  out.pstab = pstab.size();

  std::vector<int> gens;
  for (const auto& g : pstab) {
    std::vector<int> dg;
    for (int q = 0; q < d.nq(); ++q) dg.push_back(g[d.zero(q)]);
    auto it = std::lower_bound(out.z1.begin(), out.z1.end(), dg);
    if (it == out.z1.end() || *it != dg) throw std::logic_error("h1: principal derivation outside Z1");
    gens.push_back(static_cast<int>(it - out.z1.begin()));
  }
  const AbelianGroup& z = out.z1_group;
  std::set<int> sub{z.zero()};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> cur(sub.begin(), sub.end());
    for (int s : cur)
      for (int g : gens) grew = sub.insert(z.add(s, g)).second || grew;
  }
  out.pder.assign(sub.begin(), sub.end());

  const int nz = z.order();
  std::vector<int> cls(nz, -1), reps;
  for (int i = 0; i < nz; ++i) {
    if (cls[i] >= 0) continue;
    for (int p : out.pder) cls[z.add(i, p)] = static_cast<int>(reps.size());
    reps.push_back(i);
  }
  const int nh = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(nh) * nh);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) table[a * nh + b] = cls[z.add(reps[a], reps[b])];
  out.h1 = AbelianGroup(nh, std::move(table));
  return out;
}

std::vector<std::vector<int>> principal_derivations(const AffineDatum& d, int depth_cap, std::size_t cap) {
  H1Result r = h1(d, depth_cap, cap);
  std::vector<std::vector<int>> out;
  for (int i : r.pder) out.push_back(r.z1[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Report trivial_action_check(const AffineDatum& d) {
  Report r("the action is trivial");
  const int nq = d.nq(), nc = d.nc();
  for (int f = 0; f < d.signature().size() && r.holds; ++f) {
    const int ar = d.arity(f);
    if (ar < 2) continue;
    for (int mask = 1; mask < (1 << ar) && r.holds; ++mask) {
      std::vector<int> in, out;
      for (int i = 0; i < ar; ++i) (mask >> i & 1 ? in : out).push_back(i);
      std::vector<int> qs(ar), qs2(ar);
      for_each_tuple(nc, static_cast<int>(in.size()), [&](const std::vector<int>& xs) {
        if (!r.holds) return;
        for (std::size_t k = 0; k < in.size(); ++k) qs[in[k]] = qs2[in[k]] = d.class_fiber[xs[k]];
        for_each_tuple(nq, static_cast<int>(2 * out.size()), [&](const std::vector<int>& ys) {
          if (!r.holds) return;
          for (std::size_t k = 0; k < out.size(); ++k) {
            qs[out[k]] = ys[k];
            qs2[out[k]] = ys[out.size() + k];
          }
          const int u = d.q_apply(f, qs), u2 = d.q_apply(f, qs2);
          int lhs = d.zero(u), rhs = d.zero(u2);
          for (std::size_t k = 0; k < in.size(); ++k) {
            lhs = d.add(u, lhs, d.act(f, in[k], qs, xs[k]));
            rhs = d.add(u2, rhs, d.act(f, in[k], qs2, xs[k]));
          }
          rhs = d.m3(d.zero(u), d.zero(u2), rhs);
          if (lhs != rhs) {
            std::vector<int> positions;
            for (int i : in) positions.push_back(i + 1);
            r.fail(Json{{"symbol", d.signature()[f].name}, {"I", positions}, {"classes", xs}, {"q", qs}, {"q2", qs2},
                        {"lhs", lhs}, {"rhs", rhs}});
          }
        });
      });
    }
  }
  return r;
}

Report central_extension_suite(const AffineDatum& d, const std::vector<Equation>& sigma,
                               const std::optional<Term>& difference_term, std::size_t cap) {
  Report r("with a trivial action every H2 class reconstructs to a central extension");
  const bool trivial = trivial_action_check(d).holds;
  CohomologyResult res = h2(d, sigma, [](const FiniteAlgebra&) { return std::string(); }, cap);
  Json classes = Json::array();
  bool all_ok = true;
  for (std::size_t c = 0; c < res.order(); ++c) {
    Extension e = reconstruct(d, res.z2.elements[res.reps[c]]);
    Json row{{"class", c}, {"right_central", is_right_central(e.B, e.beta)}};
    bool ok = row["right_central"].get<bool>();
    if (difference_term) {
      const bool verified =
          verify_difference_term({e.B}, *difference_term, {all_congruences(e.B)}, DifferenceScope::difference).holds;
      row["difference_term"] = verified;
      if (verified) {
        row["left_central"] = is_left_central(e.B, e.beta);
        ok = ok && row["left_central"].get<bool>();
      }
    }
    all_ok = all_ok && ok;
    classes.push_back(row);
  }
  r.details = Json{{"trivial_action", trivial}, {"classes", classes}};
  if (trivial && !all_ok) r.fail(Json{{"classes", classes}});
  return r;
}

Report compare_variety_subgroups(const AffineDatum& d, const std::vector<Equation>& sigma1,
                                 const std::vector<Equation>& sigma2, std::size_t cap) {
  Report r("Z2 of the union of two equation sets is the meet of their Z2");
  auto z1 = enumerate_cocycles(d, sigma1, cap);
  auto z2 = enumerate_cocycles(d, sigma2, cap);
  auto both = sigma1;
  both.insert(both.end(), sigma2.begin(), sigma2.end());
  auto z12 = enumerate_cocycles(d, both, cap);
  std::vector<TwoCocycle> meet;
  std::set_intersection(z1.begin(), z1.end(), z2.begin(), z2.end(), std::back_inserter(meet));
  const bool meet_law = meet == z12;
  const bool monotone = std::includes(z1.begin(), z1.end(), z12.begin(), z12.end()) &&
                        std::includes(z2.begin(), z2.end(), z12.begin(), z12.end());
  auto b2 = coboundary_group(d);
  auto h2_order = [&](const std::vector<TwoCocycle>& z) -> Json {
    if (z.empty()) return "datum not contained";
    return z.size() / b2.b2.elements.size();
  };
  r.details = Json{{"z2_orders", {z1.size(), z2.size(), z12.size()}},
                   {"h2_orders", {h2_order(z1), h2_order(z2), h2_order(z12)}},
                   {"second_in_first", std::includes(z1.begin(), z1.end(), z2.begin(), z2.end())},
                   {"first_in_second", std::includes(z2.begin(), z2.end(), z1.begin(), z1.end())}};
  if (!meet_law || !monotone) r.fail(Json{{"meet_law", meet_law}, {"monotone", monotone}});
  return r;
}

Report abelian_extension_subgroup(const AffineDatum& d, const std::vector<Equation>& sigma,
                                  const std::vector<Equation>& sigma_abelian, std::size_t cap) {
  Report r("abelian extension classes form a subgroup of H2 or are absent");
  CohomologyResult res = h2(d, sigma, [](const FiniteAlgebra&) { return std::string(); }, cap);
  auto zab = enumerate_cocycles(d, sigma_abelian, cap);
  std::set<int> classes;
  for (const auto& T : zab) {
    int i = res.z2.index_of(T);
    if (i < 0) {
      r.fail(Json{{"failure", "an abelian cocycle is not in Z2"}, {"cocycle", cocycle_json(d, T)}});
      return r;
    }
    classes.insert(res.class_of[i]);
  }
  std::vector<int> E(classes.begin(), classes.end());
  r.details = Json{{"h2_order", res.order()}, {"ext_classes", E}, {"empty", E.empty()}};
  if (!E.empty() && !res.h2.is_subgroup(E)) r.fail(Json{{"ext_classes", E}});
  return r;
}

}  // namespace ua
