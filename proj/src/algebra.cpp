#include "ua/algebra.hpp"

#include <set>
#include <sstream>

namespace ua {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw InputError("signature: empty symbol name");
    if (s.arity < 0) throw InputError("signature: negative arity for " + s.name);
    if (!seen.insert(s.name).second) throw InputError("signature: duplicate symbol " + s.name);
  }
}

std::optional<int> Signature::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

int Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown operation symbol '" + std::string(name) + "'");
}

int Signature::max_arity() const {
  int m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

std::size_t checked_pow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && r > (std::size_t{1} << 40) / n)
      throw CapExceeded("table size " + std::to_string(n) + "^" + std::to_string(k) + " too large");
    r *= n;
  }
  return r;
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig, std::vector<Table> tables)
    : name_(std::move(name)), n_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
  if (n_ <= 0) throw InputError("algebra '" + name_ + "': size must be positive");
  if (static_cast<int>(tables_.size()) != sig_.size())
    throw InputError("algebra '" + name_ + "': table count does not match signature");
  for (int op = 0; op < sig_.size(); ++op) {
    std::size_t want = checked_pow(n_, sig_[op].arity);
    if (tables_[op].size() != want)
      throw InputError("algebra '" + name_ + "': operation " + sig_[op].name + " has " +
                       std::to_string(tables_[op].size()) + " entries, expected " +
                       std::to_string(want));
    for (std::size_t i = 0; i < want; ++i)
      if (tables_[op][i] < 0 || tables_[op][i] >= n_)
        throw InputError("algebra '" + name_ + "': operation " + sig_[op].name +
                         " entry " + std::to_string(i) + " out of range");
  }
}

std::optional<std::vector<int>> find_counterexample(const FiniteAlgebra& alg, const Equation& eq) {
  std::optional<std::vector<int>> bad;
  int k = eq.num_vars();
  for_each_tuple(alg.size(), k, [&](const std::vector<int>& env) {
    if (bad) return;
    if (eval_term(alg, eq.lhs, env) != eval_term(alg, eq.rhs, env)) bad = env;
  });
  return bad;
}

std::vector<std::uint32_t> generate_tuples(const FiniteAlgebra& alg, int k,
                                           const std::vector<std::uint32_t>& generators,
                                           std::size_t cap) {
  const int n = alg.size();
  const std::size_t total = checked_pow(n, k);
  if (total > cap) throw CapExceeded("tuple closure over " + std::to_string(total) + " tuples");
  std::vector<std::uint64_t> seen((total + 63) / 64, 0);
  std::vector<std::uint32_t> elems;
  std::vector<int> coords;

  auto add = [&](std::uint32_t code) {
    if (seen[code >> 6] >> (code & 63) & 1) return;
    seen[code >> 6] |= std::uint64_t{1} << (code & 63);
    elems.push_back(code);
    std::size_t base = coords.size();
    coords.resize(base + k);
    decode_tuple(code, n, std::span<int>(coords.data() + base, k));
  };

  for (auto g : generators) {
    if (g >= total) throw std::invalid_argument("generate_tuples: generator out of range");
    add(g);
  }
  for (int op = 0; op < alg.num_ops(); ++op) {
    if (alg.arity(op) != 0) continue;
    std::uint32_t code = 0;
    for (int c = 0; c < k; ++c) code = code * n + alg.table(op)[0];
    add(code);
  }

  std::vector<int> idx;
  std::vector<int> hi;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const int cur = static_cast<int>(i);
    for (int op = 0; op < alg.num_ops(); ++op) {
      const int a = alg.arity(op);
      if (a == 0) continue;
      const Table& tab = alg.table(op);
      idx.assign(a, 0);
      hi.assign(a, 0);
      for (int p = 0; p < a; ++p) {
        // tuples whose first occurrence of the newest element is at position p
        if (p > 0 && cur == 0) continue;
        for (int j = 0; j < a; ++j) hi[j] = j < p ? cur - 1 : cur;
        for (int j = 0; j < a; ++j) idx[j] = 0;
        idx[p] = cur;
        while (true) {
          std::uint32_t code = 0;
          for (int c = 0; c < k; ++c) {
            std::size_t t = 0;
            for (int j = 0; j < a; ++j) t = t * n + coords[static_cast<std::size_t>(idx[j]) * k + c];
            code = code * n + tab[t];
          }
          add(code);
          int j = a - 1;
          for (; j >= 0; --j) {
            if (j == p) continue;
            if (idx[j] < hi[j]) {
              ++idx[j];
              break;
            }
            idx[j] = 0;
          }
          if (j < 0) break;
        }
      }
    }
  }
  return elems;
}

std::vector<int> subalgebra_generate(const FiniteAlgebra& alg, std::span<const int> gens) {
  std::vector<std::uint32_t> g;
  for (int x : gens) {
    if (x < 0 || x >= alg.size()) throw InputError("generator out of range");
    g.push_back(static_cast<std::uint32_t>(x));
  }
  auto elems = generate_tuples(alg, 1, g);
  std::vector<int> out(elems.begin(), elems.end());
  std::sort(out.begin(), out.end());
  return out;
}

FiniteAlgebra power_algebra(const FiniteAlgebra& alg, int k) {
  const int n = alg.size();
  const std::size_t m = checked_pow(n, k);
  if (m > (std::size_t{1} << 16)) throw CapExceeded("power algebra too large");
  std::vector<Table> tables;
  std::vector<int> args, digits(k);
  for (int op = 0; op < alg.num_ops(); ++op) {
    int a = alg.arity(op);
    Table t(checked_pow(m, a));
    std::vector<std::vector<int>> parts(a, std::vector<int>(k));
    for (std::size_t code = 0; code < t.size(); ++code) {
      std::size_t c = code;
      for (int j = a - 1; j >= 0; --j) {
        decode_tuple(c % m, n, parts[j]);
        c /= m;
      }
      args.resize(a);
      for (int coord = 0; coord < k; ++coord) {
        for (int j = 0; j < a; ++j) args[j] = parts[j][coord];
        digits[coord] = alg.apply(op, args);
      }
      t[code] = static_cast<int>(encode_tuple(digits, n));
    }
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(alg.name() + "^" + std::to_string(k), static_cast<int>(m), alg.signature(),
                       std::move(tables));
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string name) {
  if (!(a.signature() == b.signature())) throw InputError("direct product: signatures differ");
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Table> tables;
  std::vector<int> xa, xb, args;
  for (int op = 0; op < a.num_ops(); ++op) {
    int ar = a.arity(op);
    Table t(checked_pow(n, ar));
    args.resize(ar);
    xa.resize(ar);
    xb.resize(ar);
    for (std::size_t code = 0; code < t.size(); ++code) {
      decode_tuple(code, n, args);
      for (int j = 0; j < ar; ++j) {
        xa[j] = args[j] / nb;
        xb[j] = args[j] % nb;
      }
      t[code] = a.apply(op, xa) * nb + b.apply(op, xb);
    }
    tables.push_back(std::move(t));
  }
  if (name.empty()) name = a.name() + "x" + b.name();
  return FiniteAlgebra(std::move(name), n, a.signature(), std::move(tables));
}

std::optional<std::string> compatibility_failure(const FiniteAlgebra& alg, const Partition& theta) {
  const int n = alg.size();
  if (theta.n() != n) return "partition size does not match algebra";
  std::vector<int> args;
  for (int op = 0; op < alg.num_ops(); ++op) {
    int ar = alg.arity(op);
    for (int pos = 0; pos < ar; ++pos) {
      for (int a = 0; a < n; ++a) {
        int b = theta.rep(a);
        if (a == b) continue;
        std::optional<std::string> bad;
        for_each_tuple(n, ar - 1, [&](const std::vector<int>& ctx) {
          if (bad) return;
          args.assign(ctx.begin(), ctx.begin() + pos);
          args.push_back(a);
          args.insert(args.end(), ctx.begin() + pos, ctx.end());
          int fa = alg.apply(op, args);
          args[pos] = b;
          int fb = alg.apply(op, args);
          if (!theta.related(fa, fb)) {
            std::ostringstream os;
            os << alg.signature()[op].name << " position " << pos << ": " << a << " ~ " << b
               << " but images " << fa << " and " << fb << " are not related";
            bad = os.str();
          }
        });
        if (bad) return bad;
      }
    }
  }
  return std::nullopt;
}

Quotient quotient_algebra(const FiniteAlgebra& alg, const Partition& theta) {
  if (auto bad = compatibility_failure(alg, theta)) throw InputError("not a congruence: " + *bad);
  Quotient q;
  q.map = theta.block_index();
  const int k = theta.num_blocks();
  q.reps.assign(k, -1);
  for (int a = 0; a < alg.size(); ++a)
    if (q.reps[q.map[a]] < 0) q.reps[q.map[a]] = a;
  std::vector<Table> tables;
  std::vector<int> args;
  for (int op = 0; op < alg.num_ops(); ++op) {
    int ar = alg.arity(op);
    Table t(checked_pow(k, ar));
    args.resize(ar);
    for (std::size_t code = 0; code < t.size(); ++code) {
      decode_tuple(code, k, args);
      for (int& x : args) x = q.reps[x];
      t[code] = q.map[alg.apply(op, args)];
    }
    tables.push_back(std::move(t));
  }
  q.algebra = FiniteAlgebra(alg.name() + "/~", k, alg.signature(), std::move(tables));
  return q;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const int> map) {
  if (!(a.signature() == b.signature()) || static_cast<int>(map.size()) != a.size()) return false;
  for (int x : map)
    if (x < 0 || x >= b.size()) return false;
  std::vector<int> args(a.signature().max_arity());
  for (int op = 0; op < a.num_ops(); ++op) {
    int ar = a.arity(op);
    const Table& ta = a.table(op);
    for (std::size_t code = 0; code < ta.size(); ++code) {
      std::span<int> s(args.data(), ar);
      decode_tuple(code, a.size(), s);
      for (int& x : s) x = map[x];
      if (map[ta[code]] != b.apply(op, s)) return false;
    }
  }
  return true;
}

}  // namespace ua
