#include "ua/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ua {

std::vector<int> UnionFind::least_representatives() {
  int n = size();
  std::vector<int> least(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (least[r] < 0) least[r] = i;
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = least[find(i)];
  return out;
}

Partition::Partition(std::vector<int> least_rep) : rep_(std::move(least_rep)) {
  for (int i = 0; i < n(); ++i) {
    int r = rep_[i];
    if (r < 0 || r > i || rep_[r] != r)
      throw std::invalid_argument("partition: array is not a least-representative map");
  }
}

Partition Partition::equality(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 0);
  return Partition(std::move(r));
}

Partition Partition::total(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> label(n, -1);
  int next = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 0 || x >= n) throw std::invalid_argument("partition: element out of range");
      if (label[x] >= 0) throw std::invalid_argument("partition: element in two blocks");
      label[x] = next;
    }
    ++next;
  }
  for (int& l : label)
    if (l < 0) l = next++;
  return from_labels(label);
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  std::map<int, int> first;
  std::vector<int> r(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = first.try_emplace(labels[i], static_cast<int>(i));
    r[i] = it->second;
  }
  return Partition(std::move(r));
}

Partition Partition::from_union_find(UnionFind& uf) { return Partition(uf.least_representatives()); }

int Partition::num_blocks() const {
  int c = 0;
  for (int i = 0; i < n(); ++i)
    if (rep_[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<int> idx = block_index();
  std::vector<std::vector<int>> out(num_blocks());
  for (int i = 0; i < n(); ++i) out[idx[i]].push_back(i);
  return out;
}

std::vector<int> Partition::block_index() const {
  std::vector<int> idx(n(), -1);
  int next = 0;
  for (int i = 0; i < n(); ++i) idx[i] = rep_[i] == i ? next++ : idx[rep_[i]];
  return idx;
}

std::vector<std::pair<int, int>> Partition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n(); ++a)
    for (int b = 0; b < n(); ++b)
      if (rep_[a] == rep_[b]) out.emplace_back(a, b);
  return out;
}

bool Partition::is_equality() const {
  for (int i = 0; i < n(); ++i)
    if (rep_[i] != i) return false;
  return true;
}

bool Partition::is_total() const {
  return std::all_of(rep_.begin(), rep_.end(), [](int r) { return r == 0; });
}

bool Partition::leq(const Partition& other) const {
  if (other.n() != n()) throw std::invalid_argument("partition: size mismatch");
  for (int i = 0; i < n(); ++i)
    if (other.rep_[i] != other.rep_[rep_[i]]) return false;
  return true;
}

Partition Partition::join(const Partition& other) const {
  if (other.n() != n()) throw std::invalid_argument("partition: size mismatch");
  UnionFind uf(n());
  for (int i = 0; i < n(); ++i) {
    uf.unite(i, rep_[i]);
    uf.unite(i, other.rep_[i]);
  }
  return from_union_find(uf);
}

Partition Partition::meet(const Partition& other) const {
  if (other.n() != n()) throw std::invalid_argument("partition: size mismatch");
  std::vector<int> labels(n());
  for (int i = 0; i < n(); ++i) labels[i] = rep_[i] * n() + other.rep_[i];
  return from_labels(labels);
}

}  // namespace ua
