#include <map>
#include <random>

#include "ua/algebra.hpp"

namespace ua {

namespace {

// Joint colour refinement of the elements of a and b, so equal colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int n = a.size();
  std::vector<int> ca(n, 0), cb(n, 0);
  int classes = 1;
  for (int round = 0; round < n + 1; ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature_of = [&](const FiniteAlgebra& alg, const std::vector<int>& col, int x) {
      std::vector<int> s{col[x]};
      for (int op = 0; op < alg.num_ops(); ++op) {
        int ar = alg.arity(op);
        if (ar == 0) {
          s.push_back(alg.table(op)[0] == x);
        } else if (ar == 1) {
          s.push_back(col[alg.apply(op, {x})]);
        } else if (ar == 2) {
          std::vector<int> row;
          for (int y = 0; y < n; ++y)
            row.push_back((col[y] * (n + 1) + col[alg.apply(op, {x, y})]) * (n + 1) + col[alg.apply(op, {y, x})]);
          std::sort(row.begin(), row.end());
          s.push_back(-1);
          s.insert(s.end(), row.begin(), row.end());
        } else {
          std::vector<int> diag(ar, x);
          s.push_back(col[alg.apply(op, diag)]);
        }
      }
      return s;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int x = 0; x < n; ++x) {
      sa[x] = signature_of(a, ca, x);
      sb[x] = signature_of(b, cb, x);
      ids.emplace(sa[x], 0);
      ids.emplace(sb[x], 0);
    }
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (int x = 0; x < n; ++x) {
      ca[x] = ids[sa[x]];
      cb[x] = ids[sb[x]];
    }
    if (next == classes) break;
    classes = next;
  }
  return {ca, cb};
}

struct PartialMap {
  std::vector<int> fwd, bwd;
  std::vector<int> known;
  std::size_t processed = 0;
};

bool assign(PartialMap& m, int x, int y) {
  if (m.fwd[x] >= 0) return m.fwd[x] == y;
  if (m.bwd[y] >= 0) return false;
  m.fwd[x] = y;
  m.bwd[y] = x;
  m.known.push_back(x);
  return true;
}

// Semi-naive closure of the partial map under all operations.
bool close(const FiniteAlgebra& a, const FiniteAlgebra& b, PartialMap& m) {
  std::vector<int> idx, xs, ys;
  for (; m.processed < m.known.size(); ++m.processed) {
    const int cur = static_cast<int>(m.processed);
    for (int op = 0; op < a.num_ops(); ++op) {
      const int ar = a.arity(op);
      if (ar == 0) continue;
      xs.resize(ar);
      ys.resize(ar);
      for (int p = 0; p < ar; ++p) {
        if (p > 0 && cur == 0) continue;
        idx.assign(ar, 0);
        idx[p] = cur;
        while (true) {
          for (int j = 0; j < ar; ++j) {
            xs[j] = m.known[idx[j]];
            ys[j] = m.fwd[xs[j]];
          }
          if (!assign(m, a.apply(op, xs), b.apply(op, ys))) return false;
          int j = ar - 1;
          for (; j >= 0; --j) {
            if (j == p) continue;
            int hi = j < p ? cur - 1 : cur;
            if (idx[j] < hi) {
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
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                 std::uint64_t seed) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return std::nullopt;
  const int n = a.size();
  auto [ca, cb] = refine_colors(a, b);
  {
    std::vector<int> ha(2 * n + 2, 0), hb(2 * n + 2, 0);
    for (int x = 0; x < n; ++x) {
      if (ca[x] >= static_cast<int>(ha.size()) || cb[x] >= static_cast<int>(hb.size())) {
        ha.resize(std::max(ca[x], cb[x]) + 1);
        hb.resize(ha.size());
      }
      ++ha[ca[x]];
      ++hb[cb[x]];
    }
    if (ha != hb) return std::nullopt;
  }

  PartialMap root{std::vector<int>(n, -1), std::vector<int>(n, -1), {}, 0};
  for (int op = 0; op < a.num_ops(); ++op)
    if (a.arity(op) == 0 && !assign(root, a.table(op)[0], b.table(op)[0])) return std::nullopt;
  if (!close(a, b, root)) return std::nullopt;

  // greedy generating set of a, rarest colour first among the missing elements
  std::vector<int> gens;
  {
    std::vector<int> freq(n * n + 2 * n + 2, 0);
    for (int x = 0; x < n; ++x) ++freq[ca[x]];
    std::vector<char> have(n, 0);
    for (int x : root.known) have[x] = 1;
    std::vector<int> cur(root.known.begin(), root.known.end());
    while (static_cast<int>(cur.size()) < n) {
      int best = -1;
      for (int x = 0; x < n; ++x)
        if (!have[x] && (best < 0 || freq[ca[x]] < freq[ca[best]])) best = x;
      gens.push_back(best);
      cur.push_back(best);
      auto sub = subalgebra_generate(a, cur);
      std::fill(have.begin(), have.end(), 0);
      for (int x : sub) have[x] = 1;
      cur = sub;
    }
  }

  std::vector<std::vector<int>> cands(gens.size());
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int y = 0; y < n; ++y)
      if (cb[y] == ca[gens[i]]) cands[i].push_back(y);
    if (seed != 0) std::shuffle(cands[i].begin(), cands[i].end(), rng);
  }

  std::optional<std::vector<int>> found;
  auto search = [&](auto&& self, std::size_t level, const PartialMap& state) -> void {
    if (found) return;
    if (level == gens.size()) {
      if (static_cast<int>(state.known.size()) == n && is_homomorphism(a, b, state.fwd)) found = state.fwd;
      return;
    }
    for (int y : cands[level]) {
      PartialMap next = state;
      if (!assign(next, gens[level], y)) continue;
      if (!close(a, b, next)) continue;
      self(self, level + 1, next);
      if (found) return;
    }
  };
  search(search, 0, root);
  return found;
}

}  // namespace ua
