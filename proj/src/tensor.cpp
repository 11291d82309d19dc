#include "sl2/tensor.hpp"
#include "sl2/nullspace.hpp"

#include <numeric>
#include <stdexcept>

namespace sl2 {

namespace {

SparseMatrix identity(std::size_t dim, Flavor f)
{
    SparseMatrix id(dim);
    for (std::size_t i = 0; i < dim; ++i)
        id.set(i, i, Scalar::one(f));
    return id;
}

// (A (x) B) on the pair basis, pair (i, j) at index i * dim(B) + j.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b)
{
    const std::size_t db = b.dim();
    SparseMatrix r(a.dim() * db);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (const auto& [ri, ai] : a.column(i))
            for (std::size_t j = 0; j < db; ++j)
                for (const auto& [rj, bj] : b.column(j))
                    r.add(ri * db + rj, i * db + j, ai * bj);
    return r;
}

SparseMatrix sum(SparseMatrix a, const SparseMatrix& b)
{
    for (std::size_t c = 0; c < b.dim(); ++c)
        for (const auto& [r, v] : b.column(c))
            a.add(r, c, v);
    return a;
}

struct PairBasis {
    std::vector<BasisLabel> basis;
    std::vector<Rational> weights;
    std::set<std::size_t> boundary;
};

PairBasis pair_basis(const WeightModule& a, const WeightModule& b)
{
    PairBasis pb;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            if (a.on_boundary(i) || b.on_boundary(j))
                pb.boundary.insert(pb.basis.size());
            pb.basis.push_back(BasisLabel::tensor(a.label(i), b.label(j)));
            pb.weights.push_back(a.weight(i) + b.weight(j));
        }
    return pb;
}

void require_flavor(const WeightModule& a, const WeightModule& b, Flavor f)
{
    if (a.flavor() != f || b.flavor() != f)
        throw FlavorMismatch(std::string("tensor_") + to_string(f) + " needs two " + to_string(f) + " modules, got "
                             + to_string(a.flavor()) + " and " + to_string(b.flavor()));
}

}  // namespace

WeightModule tensor_classical(const WeightModule& a, const WeightModule& b)
{
    require_flavor(a, b, Flavor::classical);
    const auto f = Flavor::classical;
    const SparseMatrix ia = identity(a.dim(), f);
    const SparseMatrix ib = identity(b.dim(), f);
    std::map<Generator, SparseMatrix> action;
    for (Generator g : generators(f))
        action.emplace(g, sum(kron(a.action(g), ib), kron(ia, b.action(g))));
    auto pb = pair_basis(a, b);
    return WeightModule(f, a.name() + " (x) " + b.name(), std::move(pb.basis), std::move(pb.weights),
                        std::move(action), std::move(pb.boundary));
}

WeightModule tensor_quantum(const WeightModule& a, const WeightModule& b)
{
    require_flavor(a, b, Flavor::quantum);
    const auto f = Flavor::quantum;
    const SparseMatrix ia = identity(a.dim(), f);
    const SparseMatrix ib = identity(b.dim(), f);
    std::map<Generator, SparseMatrix> action;
    action.emplace(Generator::E,
                   sum(kron(a.action(Generator::E), b.action(Generator::K)), kron(ia, b.action(Generator::E))));
    action.emplace(Generator::F,
                   sum(kron(a.action(Generator::F), ib), kron(a.action(Generator::Kinv), b.action(Generator::F))));
    action.emplace(Generator::K, kron(a.action(Generator::K), b.action(Generator::K)));
    action.emplace(Generator::Kinv, kron(a.action(Generator::Kinv), b.action(Generator::Kinv)));
    auto pb = pair_basis(a, b);
    return WeightModule(f, a.name() + " (x) " + b.name(), std::move(pb.basis), std::move(pb.weights),
                        std::move(action), std::move(pb.boundary));
}

WeightModule tensor(const WeightModule& a, const WeightModule& b)
{
    return a.flavor() == Flavor::classical ? tensor_classical(a, b) : tensor_quantum(a, b);
}

WeightSpaces weight_spaces(const WeightModule& m)
{
    WeightSpaces spaces;
    for (std::size_t i = 0; i < m.dim(); ++i)
        spaces[m.weight(i)].push_back(i);
    return spaces;
}

Vector normalize_vector(const Vector& x, Flavor f)
{
    if (x.is_zero())
        return x;
    if (f == Flavor::classical) {
        const Rational first = x.entries().begin()->second.rational();
        return Scalar(Rational(1) / first) * x;
    }

    LaurentPoly g;
    for (const auto& [i, c] : x.entries())
        g = lp_gcd(g, c.laurent());
    Vector y;
    for (const auto& [i, c] : x.entries())
        y.add(i, Scalar(lp_div_exact(c.laurent(), g)));

    // Rational content: clear denominators, then divide out the numerator gcd.
    mpz_class den_lcm = 1;
    for (const auto& [i, c] : y.entries())
        for (const auto& [e, q] : c.laurent().terms()) {
            mpz_class d = q.denominator();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    Vector z = Scalar(LaurentPoly(Rational(den_lcm))) * y;
    mpz_class content = 0;
    for (const auto& [i, c] : z.entries())
        for (const auto& [e, q] : c.laurent().terms()) {
            mpz_class n = q.numerator();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        }

    const LaurentPoly& first = z.entries().begin()->second.laurent();
    long shift = -first.min_exponent();
    Rational scale(mpz_class(1), content);
    if (first.leading_coefficient().sign() < 0)
        scale = -scale;
    return Scalar(LaurentPoly::monomial(shift, scale)) * z;
}

std::vector<Vector> highest_weight_vectors(const WeightModule& m, const Rational& weight)
{
    const auto spaces = weight_spaces(m);
    auto src = spaces.find(weight);
    if (src == spaces.end())
        return {};
    const Flavor f = m.flavor();
    const Generator up = raising(f);
    const SparseMatrix& raise = m.action(up);
    const auto& cols = src->second;

    DenseMatrix block;
    if (auto dst = spaces.find(weight + Rational(2)); dst != spaces.end())
        for (std::size_t row : dst->second) {
            std::vector<Scalar> r;
            r.reserve(cols.size());
            for (std::size_t c : cols)
                r.push_back(raise.at(row, c, f));
            block.push_back(std::move(r));
        }

    std::vector<Vector> out;
    for (const auto& kernel : nullspace(std::move(block), cols.size(), f)) {
        Vector x;
        for (std::size_t k = 0; k < cols.size(); ++k)
            x.add(cols[k], kernel[k]);
        x = normalize_vector(x, f);
        if (!apply(m, up, x).is_zero())
            throw std::logic_error("nullspace certificate failed in weight space " + weight.to_string() + " of "
                                   + m.name());
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<HighestWeightVector> highest_weight_vectors(const WeightModule& m)
{
    std::vector<HighestWeightVector> out;
    for (const auto& [w, idx] : weight_spaces(m))
        for (auto& x : highest_weight_vectors(m, w))
            out.push_back({w, std::move(x)});
    return out;
}

}  // namespace sl2
