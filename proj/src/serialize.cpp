#include "sl2/serialize.hpp"

namespace sl2 {

using nlohmann::json;

json to_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

json to_json(const Rational& r)
{
    if (r.is_integer())
        return to_json(r.numerator());
    return r.to_string();
}

json to_json(const LaurentPoly& p)
{
    json out = json::array();
    for (const auto& t : p.serialize())
        out.push_back(json::array({t.exponent, to_json(t.numerator), to_json(t.denominator)}));
    return out;
}

json to_json(const Scalar& s)
{
    if (s.flavor() == Flavor::classical)
        return to_json(s.rational());
    return to_json(s.laurent());
}

json to_json(const Vector& x, const std::vector<BasisLabel>& basis)
{
    json out = json::array();
    for (const auto& [i, c] : x.entries())
        out.push_back(json::array({basis.at(i).to_string(), to_json(c)}));
    return out;
}

json to_json(const Vector& x, const WeightModule& ambient) { return to_json(x, ambient.basis()); }

json to_json(const Decomposition& d)
{
    json out = json::array();
    for (const auto& [w, mult] : d.summands)
        out.push_back(json::array({w, mult}));
    return out;
}

json to_json(const RelationReport& r)
{
    json failures = json::array();
    for (const auto& c : r.checks)
        if (!c.passed)
            failures.push_back({{"relation", c.relation},
                                {"label", r.basis.at(c.basis_index).to_string()},
                                {"defect", to_json(c.defect, r.basis)}});
    json excluded = json::array();
    for (std::size_t i : r.excluded)
        excluded.push_back(r.basis.at(i).to_string());
    return {{"module", r.module},
            {"flavor", to_string(r.flavor)},
            {"relations", relation_names(r.flavor)},
            {"checked", r.checks.size()},
            {"failures", failures},
            {"excluded", excluded},
            {"passed", r.ok()}};
}

json to_json(const ComparisonReport& r)
{
    json out = {{"proportional", r.proportional}, {"interpretation", r.interpretation}};
    if (r.scalar)
        out["scalar"] = to_json(*r.scalar);
    if (r.witness)
        out["witness"] = {{"label", r.witness->label.to_string()},
                          {"phi", to_json(r.witness->phi)},
                          {"oracle", to_json(r.witness->oracle)}};
    return out;
}

json to_json(const PhiResult& phi, const WeightModule& ambient)
{
    json terms = json::array();
    for (const auto& t : phi.terms)
        terms.push_back({{"k", t.k},
                         {"first", t.first},
                         {"second", t.second},
                         {"sign", t.sign},
                         {"exponent", t.exponent},
                         {"numerator", to_json(t.numerator)},
                         {"denominator", to_json(t.denominator)}});
    return {{"interpretation", phi.interpretation},
            {"terms", terms},
            {"scale", to_json(phi.scale)},
            {"vector", to_json(phi.vector, ambient)}};
}

json module_descriptor(const WeightModule& m)
{
    json basis = json::array();
    json weights = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        basis.push_back(m.label(i).to_string());
        weights.push_back(to_json(m.weight(i)));
    }
    json boundary = json::array();
    for (std::size_t i : m.boundary())
        boundary.push_back(m.label(i).to_string());
    json action = json::object();
    for (Generator g : generators(m.flavor())) {
        json triplets = json::array();
        const auto& mat = m.action(g);
        for (std::size_t col = 0; col < m.dim(); ++col)
            for (const auto& [row, value] : mat.column(col))
                triplets.push_back(json::array({m.label(row).to_string(), m.label(col).to_string(), to_json(value)}));
        action[to_string(g)] = triplets;
    }
    return {{"name", m.name()},
            {"flavor", to_string(m.flavor())},
            {"basis", basis},
            {"weights", weights},
            {"boundary", boundary},
            {"action", action}};
}

LaurentPoly laurent_from_json(const json& j)
{
    auto big = [](const json& v) {
        if (v.is_string())
            return mpz_class(v.get<std::string>(), 10);
        return mpz_class(v.get<long>());
    };
    std::vector<LaurentTerm> terms;
    for (const auto& t : j)
        terms.push_back({t.at(0).get<long>(), big(t.at(1)), big(t.at(2))});
    return LaurentPoly::from_terms(terms);
}

}  // namespace sl2
