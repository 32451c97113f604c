#pragma once

#include <string>
#include <vector>

namespace ua {

// Finite abelian group given by an addition table on 0..n-1.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// validates the group axioms and commutativity
  AbelianGroup(int n, std::vector<int> add);

  int order() const { return n_; }
  int zero() const { return zero_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int multiple(long long k, int a) const;
  int element_order(int a) const;
  /// d1 | d2 | ... with every d > 1; empty for the trivial group
  std::vector<int> invariant_factors() const;
  bool is_subgroup(const std::vector<int>& elems) const;

 private:
  int n_ = 1;
  std::vector<int> add_{0};
  std::vector<int> neg_{0};
  int zero_ = 0;
};

/// "Z/2 x Z/4", or "0" for no factors
std::string describe_invariant_factors(const std::vector<int>& factors);

}  // namespace ua
