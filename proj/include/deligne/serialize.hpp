#pragma once

#include <json.hpp>

#include "deligne/bisym.hpp"
#include "deligne/classes.hpp"
#include "deligne/symfunc.hpp"

// JSON forms. Coefficients are decimal strings; term order is the canonical
// order of the underlying containers, so output is byte-stable.
namespace deligne::serialize {

using Json = nlohmann::ordered_json;

Json partition_json(const Partition& p);

/// [{"partition": [...], "coeff": "..."}, ...]
Json to_json(const SymFunc& f);

/// [{"lambda": [...], "mu": [...], "coeff": "..."}, ...], leading degree first.
Json to_json(const BiSymFunc& f);

/// {"basis": "S", "terms": [<BiSymFunc term objects>]}
Json s_basis_json(const SBasisCoefficients& coeffs);

/// {"basis": "h", "terms": [...]}: "lambda" lists the h(x) indices and "mu"
/// the h(y) indices of each monomial.
Json h_basis_json(const CompleteBiMonomials& monomials);

/// Accepts the array form of to_json(BiSymFunc) or an object
/// {"basis": "schur", "terms": [...]}. Coefficients may be decimal strings or
/// JSON integers. Throws std::invalid_argument on malformed input.
BiSymFunc bisym_from_json(const Json& j);

}  // namespace deligne::serialize
