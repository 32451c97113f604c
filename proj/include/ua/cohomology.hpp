#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ua/abelian_group.hpp"
#include "ua/cocycle.hpp"

namespace ua {

enum class Z2Mode { propagate, brute_force };

/// all T satisfying C1 and C2 for sigma, sorted; propagate counts search nodes against cap,
/// brute_force caps the full product of fibers
std::vector<TwoCocycle> enumerate_cocycles(const AffineDatum& d, const std::vector<Equation>& sigma,
                                           std::size_t cap = std::size_t{1} << 24,
                                           Z2Mode mode = Z2Mode::propagate);

// A finite set of cocycles closed under pointwise +_u, with its addition table.
struct CocycleGroup {
  std::vector<TwoCocycle> elements;  // sorted
  AbelianGroup group;
  /// -1 when T is not an element
  int index_of(const TwoCocycle& T) const;
};

/// Z^2 for sigma; throws std::logic_error if the set is not closed under addition
CocycleGroup cocycle_group(const AffineDatum& d, const std::vector<Equation>& sigma,
                           std::size_t cap = std::size_t{1} << 24, Z2Mode mode = Z2Mode::propagate);

struct CoboundaryGroup {
  CocycleGroup b2;
  std::vector<std::size_t> multiplicity;  // number of h giving each element
};

CoboundaryGroup coboundary_group(const AffineDatum& d, std::size_t cap = std::size_t{1} << 22);

/// names the isomorphism type of a reconstructed algebra
using IsoNamer = std::function<std::string(const FiniteAlgebra&)>;

struct CohomologyResult {
  CocycleGroup z2;
  CoboundaryGroup b2;
  std::vector<int> class_of;  // z2 index -> class
  std::vector<int> reps;      // class -> least z2 index
  AbelianGroup h2;            // on classes
  int split_class = -1;       // class of the trivial cocycle
  std::vector<std::string> types;

  std::size_t order() const { return reps.size(); }
  std::vector<int> invariant_factors() const { return h2.invariant_factors(); }
};

/// H^2 = Z^2 / B^2; an empty Z^2 gives no classes. Without a namer, types cluster by isomorphism.
CohomologyResult h2(const AffineDatum& d, const std::vector<Equation>& sigma, const IsoNamer& namer = {},
                    std::size_t cap = std::size_t{1} << 24, Z2Mode mode = Z2Mode::propagate);

/// T2 - T is a 2-coboundary
bool are_equivalent(const AffineDatum& d, const TwoCocycle& T, const TwoCocycle& T2,
                    std::size_t cap = std::size_t{1} << 22);

/// isomorphism gamma: a.B -> b.B with pi_b o gamma = pi_a and gamma(x) = m(gamma(r x), r x, x) for every
/// trace r, where m = a.m; both extensions live on one universe (as reconstructions do)
std::optional<std::vector<int>> find_stabilized_isomorphism(const Extension& a, const Extension& b,
                                                            std::size_t cap = std::size_t{1} << 22);
/// all stabilizing automorphisms of ext, sorted; the identity is among them
std::vector<std::vector<int>> stabilizers(const Extension& ext, std::size_t cap = std::size_t{1} << 22);

/// the 1-cocycle display for every symbol
bool is_derivation(const AffineDatum& d, std::span<const int> h);
/// Z^1, sorted
std::vector<std::vector<int>> derivations(const AffineDatum& d, std::size_t cap = std::size_t{1} << 22);
/// pointwise +_{l(q)}
AbelianGroup derivation_group(const AffineDatum& d, const std::vector<std::vector<int>>& z1);
/// d_gamma(q) = phi(gamma(l(q))) for the realization phi: B -> classes
std::vector<int> stabilizer_derivation(const std::vector<int>& phi, const std::vector<int>& lift,
                                       const std::vector<int>& gamma);

/// Stab(pi) against Z^1 of the extracted datum through gamma -> d_gamma; ext.m must be set
Report verify_stabilizer_correspondence(const Extension& ext, std::size_t cap = std::size_t{1} << 22);

struct H1Result {
  std::vector<std::vector<int>> z1;
  AbelianGroup z1_group;
  std::vector<int> pder;           // z1 indices of the subgroup generated by principal derivations
  std::size_t twin_pairs = 0;      // (t(x,c), t(x,d)) pairs enumerated
  std::size_t pstab = 0;           // principal stabilizing automorphisms found
  bool exact = false;              // twin closure stabilized before the depth cap
  int depth = 0;
  AbelianGroup h1;
};

/// twins of the identity in the semidirect product up to term depth depth_cap
H1Result h1(const AffineDatum& d, int depth_cap = 4, std::size_t cap = std::size_t{1} << 22);

/// the derivations of PDer, sorted
std::vector<std::vector<int>> principal_derivations(const AffineDatum& d, int depth_cap = 4,
                                                    std::size_t cap = std::size_t{1} << 22);

/// the triviality identity for every f of arity > 1, position set I and arguments
Report trivial_action_check(const AffineDatum& d);

/// with a trivial action every H^2 class reconstructs to a right-central extension; with a verified
/// difference term also left-central
Report central_extension_suite(const AffineDatum& d, const std::vector<Equation>& sigma,
                               const std::optional<Term>& difference_term = std::nullopt,
                               std::size_t cap = std::size_t{1} << 24);

/// meet law and monotonicity for Z^2 of sigma1, sigma2 and their union
Report compare_variety_subgroups(const AffineDatum& d, const std::vector<Equation>& sigma1,
                                 const std::vector<Equation>& sigma2, std::size_t cap = std::size_t{1} << 24);

/// the classes of H^2 for sigma met by Z^2 of sigma_abelian form a subgroup, or there are none
Report abelian_extension_subgroup(const AffineDatum& d, const std::vector<Equation>& sigma,
                                  const std::vector<Equation>& sigma_abelian,
                                  std::size_t cap = std::size_t{1} << 24);

}  // namespace ua
