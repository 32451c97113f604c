#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ua/abelian_group.hpp"
#include "ua/datum.hpp"
#include "ua/groups.hpp"

namespace ua {

struct NamedExtension {
  std::string name;
  Extension ext;
};

/// Z4 and Z2xZ2 over Z2 kernels, D4 and Q8 over their centers, Z2xZ4 over two kernels
std::vector<NamedExtension> extension_catalog();

/// phi[q][k]: q acting on the abelian group K (written with mul)
using GroupAction = std::vector<std::vector<int>>;

GroupAction trivial_action(const FiniteAlgebra& K, const FiniteAlgebra& Q);
/// elements outside the kernel of the first surjection Q -> Z2 act by inversion
GroupAction inversion_action(const FiniteAlgebra& K, const FiniteAlgebra& Q);
/// null when phi is a homomorphism Q -> Aut K, else a description
std::optional<std::string> action_failure(const FiniteAlgebra& K, const FiniteAlgebra& Q, const GroupAction& phi);

/// (a,x)(b,y) = (a + phi(x)(b) + f(x,y), xy) on a * |Q| + x; f empty means zero
FiniteAlgebra twisted_group(const FiniteAlgebra& K, const FiniteAlgebra& Q, const GroupAction& phi,
                            const Table& f, std::string name = {});
/// the split extension K x| Q with the kernel of the second coordinate
Extension semidirect_extension(const FiniteAlgebra& K, const FiniteAlgebra& Q, const GroupAction& phi);

// Brute-force group cohomology H^2(Q, K) with f: Q x Q -> K tables.
struct ClassicalH2 {
  std::vector<Table> cocycles;  // all of Z^2, lexicographic
  std::size_t b2_order = 0;
  std::vector<int> class_of;    // cocycle index -> class
  std::vector<int> reps;        // class -> least cocycle index
  std::vector<int> invariant_factors;
  std::vector<std::string> types;  // catalog name of each class's extension group
};

ClassicalH2 classical_h2(const FiniteAlgebra& K, const FiniteAlgebra& Q, const GroupAction& phi,
                         std::size_t cap = std::size_t{1} << 24);

/// group-theoretic identifications of A(alpha)/Delta for the normal subgroup of alpha
Report verify_grp_lemma(const FiniteAlgebra& G, const Congruence& alpha);

}  // namespace ua
