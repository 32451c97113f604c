#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace ua {

// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  /// true when two different classes were merged
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  /// least member of each element's class
  std::vector<int> least_representatives();

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Equivalence relation on 0..n-1 stored as the least member of each class.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> least_rep);

  static Partition equality(int n);
  static Partition total(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static Partition from_labels(const std::vector<int>& labels);
  static Partition from_union_find(UnionFind& uf);

  int n() const { return static_cast<int>(rep_.size()); }
  int rep(int a) const { return rep_[a]; }
  const std::vector<int>& reps() const { return rep_; }
  bool related(int a, int b) const { return rep_[a] == rep_[b]; }

  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;
  /// block number of each element, blocks ordered by least member
  std::vector<int> block_index() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool is_equality() const;
  bool is_total() const;
  bool leq(const Partition& other) const;
  Partition join(const Partition& other) const;
  Partition meet(const Partition& other) const;

  bool operator==(const Partition& other) const { return rep_ == other.rep_; }
  bool operator<(const Partition& other) const { return rep_ < other.rep_; }

 private:
  std::vector<int> rep_;
};

}  // namespace ua
