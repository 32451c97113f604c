#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ua/algebra.hpp"

namespace ua {

using Congruence = Partition;
using PairList = std::vector<std::pair<int, int>>;

/// least congruence containing base and the given pairs
Congruence cg(const FiniteAlgebra& alg, const Partition& base, const PairList& pairs);
Congruence cg(const FiniteAlgebra& alg, const PairList& pairs);
bool is_congruence(const FiniteAlgebra& alg, const Partition& theta);
/// every congruence, as joins of principal ones; throws CapExceeded past cap
std::vector<Congruence> all_congruences(const FiniteAlgebra& alg, std::size_t cap = 4096);

// The congruence alpha as a subalgebra of A x A.
struct PairAlgebra {
  int n = 0;  // size of the base algebra
  FiniteAlgebra algebra;
  std::vector<std::pair<int, int>> pairs;  // lexicographic
  std::vector<int> index;                  // a*n + b -> pair index, -1 outside alpha

  int at(int a, int b) const { return index[static_cast<std::size_t>(a) * n + b]; }
  int top(int p) const { return pairs[p].first; }
  int bottom(int p) const { return pairs[p].second; }
  int size() const { return static_cast<int>(pairs.size()); }
};

PairAlgebra pair_algebra(const FiniteAlgebra& alg, const Congruence& alpha);

/// quadruple (q1, q2, q3, q4) = matrix with rows (q1 q2), (q3 q4)
inline std::uint32_t encode_quad(int q1, int q2, int q3, int q4, int n) {
  return static_cast<std::uint32_t>(((q1 * n + q2) * n + q3) * n + q4);
}
inline std::array<int, 4> decode_quad(std::uint32_t c, int n) {
  std::array<int, 4> q{};
  for (int i = 3; i >= 0; --i) {
    q[i] = static_cast<int>(c % n);
    c /= n;
  }
  return q;
}

/// M(alpha, beta): generated by rows (x x),(y y) for x alpha y and (u v),(u v) for u beta v
std::vector<std::uint32_t> m_matrices(const FiniteAlgebra& alg, const Congruence& alpha,
                                      const Congruence& beta);

/// Delta_{alpha beta} on A(alpha), from the columns of M(alpha, beta)
Congruence delta_from_matrices(const FiniteAlgebra& alg, const PairAlgebra& pa,
                               const Congruence& alpha, const Congruence& beta);
/// Delta_{alpha beta} on A(alpha), generated by diagonal pairs over beta
Congruence delta_from_diagonals(const PairAlgebra& pa, const Congruence& beta);
/// both constructions; throws std::logic_error if they differ
Congruence delta(const FiniteAlgebra& alg, const PairAlgebra& pa, const Congruence& alpha,
                 const Congruence& beta);

/// alpha-hat on A(alpha): (a,b) ~ (c,d) iff a alpha c
Partition hat_alpha(const PairAlgebra& pa, const Congruence& alpha);
/// kernel of the projection onto coordinate i (0 = top, 1 = bottom)
Partition projection_kernel(const PairAlgebra& pa, int i);
/// pairs whose i-th coordinates are beta-related
Partition projection_preimage(const PairAlgebra& pa, int i, const Congruence& beta);

// A(alpha)/Delta_{alpha beta}; classes are numbered by their least pair index.
struct DeltaQuotient {
  PairAlgebra pa;
  Congruence delta;
  FiniteAlgebra algebra;
  std::vector<int> class_of;  // pair index -> class
  std::vector<int> rep;       // class -> least pair index

  int num_classes() const { return static_cast<int>(rep.size()); }
  /// class of [a // b]; throws if a, b are not alpha-related
  int cls(int a, int b) const;
  int diag(int a) const { return class_of[pa.at(a, a)]; }
  int top(int c) const { return pa.top(rep[c]); }
  int bottom(int c) const { return pa.bottom(rep[c]); }
};

DeltaQuotient delta_quotient(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta);

}  // namespace ua
