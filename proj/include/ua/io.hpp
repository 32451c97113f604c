#pragma once

#include <string>
#include <vector>

#include "ua/cohomology.hpp"

namespace ua {

// JSON files. Errors are InputError with "source: field: message" or "source:line:col: message".

/// parses text, reporting syntax errors by line and column
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json algebra_to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const Json& j, const std::string& source);
FiniteAlgebra load_algebra(const std::string& path);

/// {"algebra": name, "blocks": [[...], ...]}; singletons may be omitted
Json congruence_to_json(const FiniteAlgebra& alg, const Congruence& theta);
/// checks compatibility with alg
Congruence congruence_from_json(const Json& j, const FiniteAlgebra& alg, const std::string& source);
Congruence load_congruence(const std::string& path, const FiniteAlgebra& alg);

/// an array of [lhs, rhs] term strings, or "@groups" / "@abelian-groups"
std::vector<Equation> equations_from_json(const Json& j, const std::string& source);
Json equations_to_json(const std::vector<Equation>& sigma);
std::vector<Equation> load_equations(const std::string& path);

/// Q, A (single ternary symbol m), alpha blocks, rho, lift, q_m, f_delta by symbol and
/// action tables keyed "symbol:position" (1-based), each flat in the datum's index layout
Json datum_to_json(const AffineDatum& d);
AffineDatum datum_from_json(const Json& j, const std::string& source);
AffineDatum load_datum(const std::string& path);

/// {"datum": name, "tables": {symbol: nested by Q^{ar}}}
Json cocycle_to_json(const AffineDatum& d, const TwoCocycle& T, const std::string& datum_name = {});
TwoCocycle cocycle_from_json(const Json& j, const AffineDatum& d, const std::string& source);
TwoCocycle load_cocycle(const std::string& path, const AffineDatum& d);

Json cohomology_to_json(const AffineDatum& d, const CohomologyResult& r);
/// "H2 = Z/2, classes: [Z2xZ2 (split), Z4]"
std::string cohomology_summary(const CohomologyResult& r);
/// "0", "Z/2", "Z/2 x Z/4"
std::string group_name(const std::vector<int>& invariant_factors);

}  // namespace ua
