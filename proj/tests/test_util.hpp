#pragma once

#include "sl2/laurent.hpp"

#include <random>

namespace sl2::test {

inline LaurentPoly P(std::initializer_list<std::pair<long, long>> terms)
{
    LaurentPoly p;
    for (auto [e, c] : terms)
        p += LaurentPoly::monomial(e, Rational(c));
    return p;
}

/// Exact value of p at v = x.
inline Rational evaluate(const LaurentPoly& p, const Rational& x)
{
    Rational sum;
    for (const auto& [e, c] : p.terms()) {
        Rational pw(1);
        for (long i = 0; i < (e < 0 ? -e : e); ++i)
            pw *= x;
        sum += e < 0 ? c / pw : c * pw;
    }
    return sum;
}

inline LaurentPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), num(-7, 7), den(1, 4);
    LaurentPoly p;
    for (int t = nterms(rng); t > 0; --t)
        p += LaurentPoly::monomial(exp(rng), Rational(num(rng), den(rng)));
    return p;
}

}  // namespace sl2::test
