#include "sl2/phi.hpp"
#include "sl2/qarith.hpp"
#include "sl2/tensor.hpp"

#include <algorithm>

namespace sl2 {

PhiInterpretation default_phi_interpretation()
{
    return {"first-k/second-from-bottom",
            "first factor w_k of F_m; second factor subscript n-p+k counted from the bottom of F_n, i.e. w_{p-k}",
            [](long, long, long p, long k) { return std::pair{k, p - k}; }};
}

PhiInterpretation literal_phi_interpretation()
{
    return {"first-by-weight/second-as-written",
            "second factor w_{n-p+k} of F_n; first factor the F_m position giving total weight m+n-2p",
            [](long, long n, long p, long k) {
                const long second = n - p + k;
                // weight(first) = m+n-2p - (n - 2*second); position = (m - weight) / 2
                return std::pair{2 * p - n - k, second};
            }};
}

std::vector<PhiInterpretation> phi_interpretations()
{
    return {default_phi_interpretation(), literal_phi_interpretation()};
}

PhiInterpretation phi_interpretation(const std::string& id)
{
    for (auto& i : phi_interpretations())
        if (i.id == id)
            return i;
    throw std::invalid_argument("unknown interpretation '" + id + "'");
}

namespace {

LaurentPoly q_fact_ratio(long top, long bottom)
{
    // [top]! / [bottom]! for top >= bottom >= 0
    LaurentPoly r(1);
    for (long i = bottom + 1; i <= top; ++i)
        r *= q_int(i);
    return r;
}

}  // namespace

PhiResult phi_vector(long m, long n, long p, const PhiInterpretation& interp)
{
    if (m < 0 || n < 0 || p < 0 || p > std::min(m, n))
        throw DomainError("phi_vector needs 0 <= p <= min(m, n); got m=" + std::to_string(m) + " n="
                          + std::to_string(n) + " p=" + std::to_string(p));

    PhiResult out{interp.id, m, n, p, {}, q_fact_ratio(m, m - p), {}};
    const int sign = ((n - p) % 2 == 0) ? 1 : -1;
    const auto dim_n = static_cast<std::size_t>(n + 1);
    for (long k = 0; k <= p; ++k) {
        auto [first, second] = interp.positions(m, n, p, k);
        if (first < 0 || first > m || second < 0 || second > n)
            throw PhiIndexError("term k=" + std::to_string(k) + " of phi(m=" + std::to_string(m) + ", n="
                                + std::to_string(n) + ", p=" + std::to_string(p) + ") under '" + interp.id
                                + "' lands on w_" + std::to_string(first) + "|w_" + std::to_string(second)
                                + ", outside F_" + std::to_string(m) + " (x) F_" + std::to_string(n));
        PhiTerm t{k, first, second, sign, (k - p) * (2 + m) + p * p - k * k + n,
                  q_fact_ratio(n - p + k, n - p), q_fact_ratio(m, m - k)};
        // scale / denominator = [m-k]! / [m-p]!
        LaurentPoly c = LaurentPoly::monomial(t.exponent, Rational(sign)) * t.numerator * q_fact_ratio(m - k, m - p);
        out.vector.add(static_cast<std::size_t>(first) * dim_n + static_cast<std::size_t>(second), Scalar(c));
        out.terms.push_back(std::move(t));
    }
    return out;
}

ComparisonReport compare_vectors(const Vector& phi, const Vector& oracle, const WeightModule& ambient)
{
    ComparisonReport r;
    const Flavor f = ambient.flavor();
    if (oracle.is_zero())
        throw std::invalid_argument("oracle vector is zero");

    auto witness = [&](std::size_t i) {
        r.proportional = false;
        r.witness = ComparisonWitness{i, ambient.label(i), phi.coefficient(i, f), oracle.coefficient(i, f)};
        return r;
    };

    // Union of supports in basis order; a label present in one vector only is a witness.
    std::set<std::size_t> support;
    for (const auto& [i, c] : phi.entries())
        support.insert(i);
    for (const auto& [i, c] : oracle.entries())
        support.insert(i);

    const std::size_t anchor = oracle.entries().begin()->first;
    const Scalar phi_a = phi.coefficient(anchor, f);
    const Scalar oracle_a = oracle.entries().begin()->second;
    for (std::size_t i : support) {
        const Scalar x = phi.coefficient(i, f);
        const Scalar y = oracle.coefficient(i, f);
        if (x.is_zero() != y.is_zero())
            return witness(i);
        if (!(x * oracle_a == y * phi_a))
            return witness(i);
    }
    r.proportional = true;
    r.scalar = div_exact(phi_a, oracle_a);
    return r;
}

PhiAdjudication phi_vs_oracle(long m, long n, long p, const PhiInterpretation& interp)
{
    PhiResult phi = phi_vector(m, n, p, interp);
    const WeightModule ambient = tensor_quantum(finite_dim_quantum(m), finite_dim_quantum(n));
    auto kernel = highest_weight_vectors(ambient, Rational(m + n - 2 * p));
    if (kernel.size() != 1)
        throw std::logic_error("expected a one-dimensional kernel of E in weight " + std::to_string(m + n - 2 * p)
                               + ", found dimension " + std::to_string(kernel.size()));
    ComparisonReport report = compare_vectors(phi.vector, kernel.front(), ambient);
    report.interpretation = interp.id;
    return {std::move(phi), std::move(kernel.front()), std::move(report)};
}

}  // namespace sl2
