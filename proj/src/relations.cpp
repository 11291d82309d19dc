#include "sl2/relations.hpp"
#include "sl2/qarith.hpp"

#include <algorithm>

namespace sl2 {

std::size_t RelationReport::failure_count() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::vector<std::size_t> RelationReport::failing_vectors() const
{
    std::vector<std::size_t> out;
    for (const auto& c : checks)
        if (!c.passed)
            out.push_back(c.basis_index);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> relation_names(Flavor f)
{
    if (f == Flavor::classical)
        return {"[h,e]=2e", "[h,f]=-2f", "[e,f]=h"};
    return {"K*Kinv=1", "K*E*Kinv=v^2*E", "K*F*Kinv=v^-2*F", "EF-FE=[wt]"};
}

namespace {

std::vector<Vector> classical_defects(const WeightModule& m, const Vector& x)
{
    auto act = [&](Generator g, const Vector& y) { return apply(m, g, y); };
    const Scalar two(Rational(2));
    Vector ex = act(Generator::e, x);
    Vector fx = act(Generator::f, x);
    Vector hx = act(Generator::h, x);
    return {
        act(Generator::h, ex) - act(Generator::e, hx) - two * ex,
        act(Generator::h, fx) - act(Generator::f, hx) + two * fx,
        act(Generator::e, fx) - act(Generator::f, ex) - hx,
    };
}

std::vector<Vector> quantum_defects(const WeightModule& m, std::size_t index, const Vector& x)
{
    auto act = [&](Generator g, const Vector& y) { return apply(m, g, y); };
    Vector kinv_x = act(Generator::Kinv, x);
    const Scalar v2(LaurentPoly::monomial(2));
    const Scalar vm2(LaurentPoly::monomial(-2));

    Vector commutator = act(Generator::E, act(Generator::F, x)) - act(Generator::F, act(Generator::E, x));
    const Rational& wt = m.weight(index);
    Vector expected;
    if (auto w = wt.to_long())
        expected = Scalar(q_int(*w)) * x;
    else
        throw DomainError("quantum weight " + wt.to_string() + " is not an integer");

    return {
        act(Generator::K, kinv_x) - x,
        act(Generator::K, act(Generator::E, kinv_x)) - v2 * act(Generator::E, x),
        act(Generator::K, act(Generator::F, kinv_x)) - vm2 * act(Generator::F, x),
        commutator - expected,
    };
}

}  // namespace

RelationReport check_relations(const WeightModule& m)
{
    RelationReport report{m.name(), m.flavor(), m.basis(), {}, {}};
    const auto names = relation_names(m.flavor());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m.on_boundary(i)) {
            report.excluded.push_back(i);
            continue;
        }
        Vector x = Vector::basis(i, m.flavor());
        auto defects = m.flavor() == Flavor::classical ? classical_defects(m, x) : quantum_defects(m, i, x);
        for (std::size_t r = 0; r < names.size(); ++r) {
            bool passed = defects[r].is_zero();
            report.checks.push_back({names[r], i, passed, std::move(defects[r])});
        }
    }
    return report;
}

std::vector<WeightViolation> check_weight_structure(const WeightModule& m)
{
    std::vector<WeightViolation> out;
    for (Generator g : generators(m.flavor())) {
        const SparseMatrix& mat = m.action(g);
        const bool diagonal = weight_shift(g) == 0;
        for (std::size_t col = 0; col < m.dim(); ++col)
            for (const auto& [row, value] : mat.column(col)) {
                bool good = m.weight(row) - m.weight(col) == Rational(weight_shift(g));
                if (diagonal) {
                    good = good && row == col;
                    if (good && g == Generator::h)
                        good = value.rational() == m.weight(col);
                    if (good && (g == Generator::K || g == Generator::Kinv)) {
                        auto w = m.weight(col).to_long();
                        good = w.has_value()
                               && value.laurent() == LaurentPoly::monomial(g == Generator::K ? *w : -*w);
                    }
                }
                if (!good)
                    out.push_back({g, row, col});
            }
    }
    return out;
}

}  // namespace sl2
