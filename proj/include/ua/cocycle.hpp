#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ua/datum.hpp"

namespace ua {

/// T_f = delta o l o f^Q
TwoCocycle zero_cocycle(const AffineDatum& d);

/// reads T_f at a cell (base-|Q| index of the argument tuple)
using CellReader = std::function<int(int f, std::size_t cell)>;

/// values of the operations in E_t at qs, in their fixed order
std::vector<int> derived_values(const AffineDatum& d, const CellReader& T, const Term& t, std::span<const int> qs);
/// t^{d,T}(qs): the E_t values summed over the fiber of t^Q(qs)
int partial_derivative(const AffineDatum& d, const CellReader& T, const Term& t, std::span<const int> qs);
int partial_derivative(const AffineDatum& d, const TwoCocycle& T, const Term& t, std::span<const int> qs);

/// C1: each T_f(q) lies in the fiber over f^Q(q)
Report check_fiber_condition(const AffineDatum& d, const TwoCocycle& T);
/// C1 and C2 for every equation of sigma
Report check_cocycle(const AffineDatum& d, const TwoCocycle& T, const std::vector<Equation>& sigma);

/// the extension A_T on the classes of the datum; lift = delta o l, m = class-level m
Extension reconstruct(const AffineDatum& d, const TwoCocycle& T);

/// search for a bijection i and a lifting l witnessing that ext realizes d
Report check_realization(const Extension& ext, const AffineDatum& d, std::size_t cap = std::size_t{1} << 22);

/// retraction r = l o pi for a homomorphic lifting l, if one exists
std::optional<std::vector<int>> find_retraction(const Extension& ext, std::size_t cap = std::size_t{1} << 22);
/// the retraction witnessing that ext is semidirect, if any
std::optional<std::vector<int>> is_semidirect(const Extension& ext, std::size_t cap = std::size_t{1} << 22);
/// idempotent endomorphism with kernel beta, by search over all self-maps of B
std::optional<std::vector<int>> find_retraction_direct(const Extension& ext, std::size_t cap = std::size_t{1} << 22);

/// universe b * |Q| + q; F_f((b,q)) = (plus(f^B(b), T_f(q)), f^Q(q))
FiniteAlgebra tensor_product(const FiniteAlgebra& B, const FiniteAlgebra& Q, const Table& plus,
                             const std::vector<Table>& transfers, std::string name = {});

TwoCocycle cocycle_add(const AffineDatum& d, const TwoCocycle& a, const TwoCocycle& b);
TwoCocycle cocycle_sub(const AffineDatum& d, const TwoCocycle& a, const TwoCocycle& b);
TwoCocycle cocycle_neg(const AffineDatum& d, const TwoCocycle& a);

/// G_h for h: Q -> classes with h(q) in the fiber over q
TwoCocycle coboundary(const AffineDatum& d, std::span<const int> h);

/// h with T2 - T = G_h, if one exists
std::optional<std::vector<int>> cocycle_difference_coboundary(const AffineDatum& d, const TwoCocycle& T,
                                                              const TwoCocycle& T2,
                                                              std::size_t cap = std::size_t{1} << 22);

/// number of maps choosing one class per fiber, throwing CapExceeded above cap
std::size_t fiber_section_count(const AffineDatum& d, std::size_t cap);
/// calls f(h) for every h with h(q) in the fiber over q; stops when f returns false
void for_each_fiber_section(const AffineDatum& d, const std::function<bool(const std::vector<int>&)>& f);

}  // namespace ua
