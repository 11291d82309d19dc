#pragma once

#include "sl2/decompose.hpp"
#include "sl2/phi.hpp"
#include "sl2/relations.hpp"

#include <json.hpp>

namespace sl2 {

// Exact JSON forms: integers as numbers (or decimal strings when they exceed 64 bits),
// non-integral rationals as "a/b", Laurent polynomials as ascending [exponent, num, den]
// triples.

nlohmann::json to_json(const mpz_class& z);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const Scalar& s);
/// [[label, scalar], ...] in basis order.
nlohmann::json to_json(const Vector& x, const WeightModule& ambient);
/// Same, with labels taken from a basis list.
nlohmann::json to_json(const Vector& x, const std::vector<BasisLabel>& basis);
/// [[weight, multiplicity], ...], highest weight first.
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const PhiResult& phi, const WeightModule& ambient);
/// Flavor, basis labels, weights, boundary and per-generator [row label, column label, scalar] triplets.
nlohmann::json module_descriptor(const WeightModule& m);

LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace sl2
