#pragma once

#include <functional>
#include <string_view>

#include "ua/algebra.hpp"

namespace ua {

/// mul/2, inv/1, e/0
Signature group_signature();

/// group algebra from a multiplication; identity and inverses are found by search
FiniteAlgebra group_from_mul(std::string name, int n, const std::function<int(int, int)>& mul);

FiniteAlgebra cyclic_group(int n);
/// rotations r^a s^b stored as 2a + b, order 2n
FiniteAlgebra dihedral_group(int n);
/// 1, -1, i, -i, j, -j, k, -k
FiniteAlgebra quaternion_group();
/// permutations of {0,1,2} in lexicographic order
FiniteAlgebra symmetric_group3();

/// groups of order at most 8 used as ground truth
const std::vector<FiniteAlgebra>& group_catalog();
/// throws InputError for an unknown name
const FiniteAlgebra& catalog_group(std::string_view name);
/// catalog name of a group isomorphic to g, or empty
std::string identify_group(const FiniteAlgebra& g);

std::vector<Equation> group_axioms();
std::vector<Equation> abelian_group_axioms();
/// x0 * x1^-1 * x2
Term group_malcev_term();

/// cosets of a normal subgroup given by its elements
Partition normal_subgroup_congruence(const FiniteAlgebra& g, const std::vector<int>& kernel);
/// cosets of the center
Partition center_congruence(const FiniteAlgebra& g);
/// block of the identity
std::vector<int> kernel_elements(const FiniteAlgebra& g, const Partition& theta);

/// true when the multiplication table satisfies the group axioms
bool is_group(const FiniteAlgebra& g);

}  // namespace ua
