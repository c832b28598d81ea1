#include "deligne/serialize.hpp"

#include <stdexcept>

namespace deligne::serialize {

namespace {

Json bi_terms(const std::map<BiIndex, Integer>& terms) {
    Json out = Json::array();
    for (const auto& [idx, c] : terms)
        out.push_back(Json{{"lambda", partition_json(idx.x)}, {"mu", partition_json(idx.y)}, {"coeff", to_decimal(c)}});
    return out;
}

Partition partition_from_json(const Json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string("field '") + field + "' must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + field + "' must hold integers");
        parts.push_back(v.get<int>());
    }
    for (int v : parts)
        if (v <= 0) throw std::invalid_argument(std::string("field '") + field + "' must hold positive parts");
    return Partition(std::move(parts));
}

Integer coeff_from_json(const Json& j) {
    if (j.is_string()) {
        Integer out;
        if (out.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("coefficient is not a decimal integer");
        return out;
    }
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    throw std::invalid_argument("coefficient must be a decimal string or an integer");
}

}  // namespace

Json partition_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts()) out.push_back(part);
    return out;
}

Json to_json(const SymFunc& f) {
    Json out = Json::array();
    for (const auto& [p, c] : f.terms()) out.push_back(Json{{"partition", partition_json(p)}, {"coeff", to_decimal(c)}});
    return out;
}

Json to_json(const BiSymFunc& f) { return bi_terms(f.terms()); }

Json s_basis_json(const SBasisCoefficients& coeffs) { return Json{{"basis", "S"}, {"terms", bi_terms(coeffs)}}; }

Json h_basis_json(const CompleteBiMonomials& monomials) {
    return Json{{"basis", "h"}, {"terms", bi_terms(monomials)}};
}

BiSymFunc bisym_from_json(const Json& j) {
    const Json* terms = &j;
    if (j.is_object()) {
        if (j.contains("basis") && j.at("basis") != "schur")
            throw std::invalid_argument("input basis must be \"schur\"");
        if (!j.contains("terms")) throw std::invalid_argument("input object needs a \"terms\" array");
        terms = &j.at("terms");
    }
    if (!terms->is_array()) throw std::invalid_argument("input must be an array of terms");
    BiSymFunc out;
    for (const auto& term : *terms) {
        if (!term.is_object() || !term.contains("lambda") || !term.contains("mu") || !term.contains("coeff"))
            throw std::invalid_argument("each term needs \"lambda\", \"mu\" and \"coeff\"");
        out.add_term({partition_from_json(term.at("lambda"), "lambda"), partition_from_json(term.at("mu"), "mu")},
                     coeff_from_json(term.at("coeff")));
    }
    return out;
}

}  // namespace deligne::serialize
