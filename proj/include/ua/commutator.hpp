#pragma once

#include <map>
#include <vector>

#include "ua/congruence.hpp"
#include "ua/report.hpp"

namespace ua {

/// term-condition commutator [alpha, beta]
Congruence tc_commutator(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta);

// Memoised commutators of one algebra.
class CommutatorCache {
 public:
  explicit CommutatorCache(const FiniteAlgebra& alg) : alg_(&alg) {}
  const Congruence& get(const Congruence& alpha, const Congruence& beta);
  const FiniteAlgebra& algebra() const { return *alg_; }

 private:
  const FiniteAlgebra* alg_;
  std::map<std::pair<Congruence, Congruence>, Congruence> memo_;
};

bool is_abelian(const FiniteAlgebra& alg, const Congruence& alpha);
/// [1, alpha] = 0
bool is_right_central(const FiniteAlgebra& alg, const Congruence& alpha);
/// [alpha, 1] = 0
bool is_left_central(const FiniteAlgebra& alg, const Congruence& alpha);

/// abelian check with a failing term-condition matrix as witness
Report abelian_report(const FiniteAlgebra& alg, const Congruence& alpha);
Report central_report(const FiniteAlgebra& alg, const Congruence& alpha);

/// [1]_1 = [1,1], [1]_{k+1} = [1, [1]_k], for k = 1..depth
std::vector<Congruence> lower_central_series(const FiniteAlgebra& alg, int depth);

enum class DifferenceScope { difference, weak };

/// checks t against each congruence listed for each algebra of the family
Report verify_difference_term(const std::vector<FiniteAlgebra>& family, const Term& t,
                              const std::vector<std::vector<Congruence>>& thetas, DifferenceScope scope);

/// m is Mal'cev and self-commuting on every alpha-block
Report verify_ternary_abelian_group_on_blocks(int n, const Table& m, const Partition& alpha);

}  // namespace ua
