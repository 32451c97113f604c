#include "ua/groups.hpp"

#include <array>

namespace ua {

Signature group_signature() { return Signature({{"mul", 2}, {"inv", 1}, {"e", 0}}); }

FiniteAlgebra group_from_mul(std::string name, int n, const std::function<int(int, int)>& mul) {
  Table m(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[x * n + y] = mul(x, y);
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = m[c * n + x] == x && m[x * n + c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw InputError("group_from_mul: no identity in " + name);
  Table inv(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m[x * n + y] == e && m[y * n + x] == e) inv[x] = y;
  for (int x = 0; x < n; ++x)
    if (inv[x] < 0) throw InputError("group_from_mul: element without inverse in " + name);
  return FiniteAlgebra(std::move(name), n, group_signature(), {m, inv, Table{e}});
}

FiniteAlgebra cyclic_group(int n) {
  return group_from_mul("Z" + std::to_string(n), n, [n](int x, int y) { return (x + y) % n; });
}

FiniteAlgebra dihedral_group(int n) {
  // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d)
  return group_from_mul(n == 4 ? "D4" : "D" + std::to_string(n), 2 * n, [n](int x, int y) {
    int a = x / 2, b = x % 2, c = y / 2, d = y % 2;
    int r = ((b ? a - c : a + c) % n + n) % n;
    return 2 * r + (b ^ d);
  });
}

FiniteAlgebra quaternion_group() {
  // unit u in {1,i,j,k} and sign s, stored as 2u + s
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return group_from_mul("Q8", 8, [](int x, int y) {
    int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
    return 2 * unit[ux][uy] + (sx ^ sy ^ sign[ux][uy]);
  });
}

FiniteAlgebra symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_mul("S3", 6, [perms](int x, int y) {
    // (x*y)(i) = x(y(i))
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = perms[x][perms[y][i]];
    return static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
  });
}

const std::vector<FiniteAlgebra>& group_catalog() {
  static const std::vector<FiniteAlgebra> cat = [] {
    std::vector<FiniteAlgebra> c;
    for (int n : {1, 2, 3, 4}) c.push_back(cyclic_group(n));
    c.push_back(direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2"));
    c.push_back(symmetric_group3());
    c.push_back(cyclic_group(6));
    c.push_back(cyclic_group(8));
    c.push_back(direct_product(cyclic_group(2), cyclic_group(4), "Z2xZ4"));
    c.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2),
                               "Z2xZ2xZ2"));
    c.push_back(dihedral_group(4));
    c.push_back(quaternion_group());
    return c;
  }();
  return cat;
}

const FiniteAlgebra& catalog_group(std::string_view name) {
  for (const auto& g : group_catalog())
    if (g.name() == name) return g;
  throw InputError("unknown catalog group '" + std::string(name) + "'");
}

std::string identify_group(const FiniteAlgebra& g) {
  for (const auto& c : group_catalog())
    if (c.size() == g.size() && find_isomorphism(g, c)) return c.name();
  return {};
}

std::vector<Equation> group_axioms() {
  auto t = [](const char* s) { return parse_term(s); };
  return {
      {t("(mul (mul x0 x1) x2)"), t("(mul x0 (mul x1 x2))")},
      {t("(mul e x0)"), t("x0")},
      {t("(mul x0 e)"), t("x0")},
      {t("(mul (inv x0) x0)"), t("e")},
      {t("(mul x0 (inv x0))"), t("e")},
  };
}

std::vector<Equation> abelian_group_axioms() {
  auto eqs = group_axioms();
  eqs.push_back({parse_term("(mul x0 x1)"), parse_term("(mul x1 x0)")});
  return eqs;
}

Term group_malcev_term() { return parse_term("(mul (mul x0 (inv x1)) x2)"); }

Partition normal_subgroup_congruence(const FiniteAlgebra& g, const std::vector<int>& kernel) {
  const int e = g.table(2)[0];
  std::vector<int> label(g.size());
  for (int x = 0; x < g.size(); ++x) {
    int least = x;
    for (int k : kernel) least = std::min(least, g.apply(0, {x, k}));
    label[x] = least;
  }
  Partition p = Partition::from_labels(label);
  if (!p.related(e, e) || compatibility_failure(g, p)) throw InputError("subset is not a normal subgroup");
  for (int k : kernel)
    if (!p.related(k, e)) throw InputError("subset is not a subgroup");
  return p;
}

Partition center_congruence(const FiniteAlgebra& g) {
  std::vector<int> z;
  for (int x = 0; x < g.size(); ++x) {
    bool central = true;
    for (int y = 0; y < g.size() && central; ++y) central = g.apply(0, {x, y}) == g.apply(0, {y, x});
    if (central) z.push_back(x);
  }
  return normal_subgroup_congruence(g, z);
}

std::vector<int> kernel_elements(const FiniteAlgebra& g, const Partition& theta) {
  std::vector<int> k;
  for (int x = 0; x < g.size(); ++x)
    if (theta.related(x, g.table(2)[0])) k.push_back(x);
  return k;
}

bool is_group(const FiniteAlgebra& g) {
  if (!(g.signature() == group_signature())) return false;
  for (const auto& eq : group_axioms())
    if (find_counterexample(g, eq)) return false;
  return true;
}

}  // namespace ua
