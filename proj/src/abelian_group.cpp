#include "ua/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ua/algebra.hpp"

namespace ua {

AbelianGroup::AbelianGroup(int n, std::vector<int> add) : n_(n), add_(std::move(add)) {
  if (n <= 0 || add_.size() != static_cast<std::size_t>(n) * n) throw InputError("abelian group: bad table size");
  zero_ = -1;
  for (int z = 0; z < n && zero_ < 0; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = this->add(z, x) == x;
    if (ok) zero_ = z;
  }
  if (zero_ < 0) throw InputError("abelian group: no zero");
  neg_.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (this->add(x, y) != this->add(y, x)) throw InputError("abelian group: not commutative");
      if (this->add(x, y) == zero_) neg_[x] = y;
    }
  for (int x = 0; x < n; ++x) {
    if (neg_[x] < 0) throw InputError("abelian group: element without inverse");
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (this->add(this->add(x, y), z) != this->add(x, this->add(y, z)))
          throw InputError("abelian group: not associative");
  }
}

int AbelianGroup::multiple(long long k, int a) const {
  if (k < 0) {
    k = -k;
    a = neg(a);
  }
  int r = zero_;
  while (k > 0) {
    if (k & 1) r = add(r, a);
    a = add(a, a);
    k >>= 1;
  }
  return r;
}

int AbelianGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != zero_; x = add(x, a)) ++k;
  return k;
}

std::vector<int> AbelianGroup::invariant_factors() const {
  // p-primary parts from the counts #{x : p^j x = 0}
  std::map<int, int> primes;
  int m = n_;
  for (int p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++primes[p];
      m /= p;
    }
  if (m > 1) ++primes[m];
  std::vector<std::vector<int>> parts;  // descending prime powers per prime
  for (auto [p, e] : primes) {
    std::vector<int> s(e + 2, 0);
    long long pj = 1;
    for (int j = 0; j <= e + 1; ++j) {
      int count = 0;
      for (int x = 0; x < n_; ++x)
        if (multiple(pj, x) == zero_) ++count;
      int lg = 0;
      for (int c = count; c > 1; c /= p) ++lg;
      s[j] = lg;
      pj *= p;
    }
    // c[j] = number of cyclic factors with exponent >= j
    std::vector<int> powers;
    for (int j = e; j >= 1; --j) {
      int ge = s[j] - s[j - 1];
      int ge_next = j + 1 <= e ? s[j + 1] - s[j] : 0;
      int pw = 1;
      for (int i = 0; i < j; ++i) pw *= p;
      for (int c = 0; c < ge - ge_next; ++c) powers.push_back(pw);
    }
    parts.push_back(powers);
  }
  std::size_t len = 0;
  for (const auto& v : parts) len = std::max(len, v.size());
  std::vector<int> out(len, 1);
  for (const auto& v : parts)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  std::reverse(out.begin(), out.end());
  return out;
}

bool AbelianGroup::is_subgroup(const std::vector<int>& elems) const {
  std::vector<char> in(n_, 0);
  for (int x : elems) in[x] = 1;
  if (!in[zero_]) return false;
  for (int x : elems) {
    if (!in[neg(x)]) return false;
    for (int y : elems)
      if (!in[add(x, y)]) return false;
  }
  return true;
}

std::string describe_invariant_factors(const std::vector<int>& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors[i]);
  }
  return s;
}

}  // namespace ua
