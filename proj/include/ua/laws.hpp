#pragma once

#include <vector>

#include "ua/cocycle.hpp"

namespace ua {

// Commutator and decomposition identities checked exhaustively on one algebra; d is a
// difference term unless stated otherwise.

/// A(alpha)/Delta_{alpha 1} is abelian
Report check_delta_one_abelian(const FiniteAlgebra& alg, const Congruence& alpha);
/// x/[alpha,beta] -> ([r(x) // x]/Delta_{alpha beta}, x/sigma) is injective for the least-member trace of sigma
Report check_trace_embedding(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta,
                             const Congruence& sigma);
/// [a // b] Delta_{alpha beta} [a // d] implies b [alpha,beta] d
Report check_delta_same_top(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta);
/// alpha abelian: some a has [a // b] Delta_{alpha beta} [a // d] iff b [beta,alpha] d
Report check_delta_same_top_abelian(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta);
/// alpha abelian, alpha <= gamma, [gamma, alpha] = 0: Delta_{alpha alpha} = Delta_{alpha gamma} meet alpha-hat
Report check_delta_meet(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& gamma);
/// alpha abelian: the three descriptions of Delta_{alpha beta} agree on all quadruples
Report check_delta_descriptions(const FiniteAlgebra& alg, const Congruence& alpha, const Congruence& beta,
                                const Term& d);
/// [u // u] and [a // d(a,b,b)] share a Delta_{alpha 1} class
Report check_diagonal_class(const FiniteAlgebra& alg, const Congruence& alpha, const Term& d);
/// A/[alpha,1] (alpha/[alpha,1]) / Delta = A(alpha)/Delta_{alpha 1} up to isomorphism
Report check_delta_one_quotient(const FiniteAlgebra& alg, const Congruence& alpha);

/// [1, ker q] = 0 for the projection q of B (x) Q with plus = m(x, zero, y)
Report check_tensor_right_central(const FiniteAlgebra& B, const FiniteAlgebra& Q, const Term& m, int zero,
                                  const std::vector<Table>& transfers);

// A/[alpha,1] = A(alpha)/Delta_{alpha 1} (x)^T A/alpha for abelian alpha.
struct ExtensionDecomposition {
  FiniteAlgebra kernel_part;    // A(alpha)/Delta_{alpha 1}
  FiniteAlgebra quotient_part;  // A/alpha
  Table plus;                   // x + y = d(x, 0, y)
  std::vector<Table> transfers;
  FiniteAlgebra product;
  std::vector<int> psi;  // A -> product; constant on [alpha,1] classes
  Report report;         // psi induces an isomorphism A/[alpha,1] -> product
};

ExtensionDecomposition decompose_extension(const FiniteAlgebra& alg, const Congruence& alpha, const Term& d);

// A = Q_n (x) (Q_{n-1} (x) ... (x) Q_1), right-associated, for n-step nilpotent A.
struct NilpotentDecomposition {
  std::vector<FiniteAlgebra> factors;  // Q_1 .. Q_n
  FiniteAlgebra product;
  std::vector<int> iso;                // A -> product
  Report report;
};

NilpotentDecomposition decompose_nilpotent(const FiniteAlgebra& alg, int steps, const Term& d);

/// a right-associated product of abelian factors is steps-step nilpotent: [1]_steps = 0
Report check_product_nilpotent(const FiniteAlgebra& product, int steps);

}  // namespace ua
