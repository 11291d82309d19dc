#include "sl2/laurent.hpp"

#include <sstream>

namespace sl2 {

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& c)
{
    LaurentPoly p;
    p.set(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<LaurentTerm>& terms)
{
    LaurentPoly p;
    for (const auto& t : terms)
        p.accumulate(t.exponent, Rational(t.numerator, t.denominator));
    return p;
}

void LaurentPoly::set(long exponent, const Rational& c)
{
    if (c.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

void LaurentPoly::accumulate(long exponent, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational LaurentPoly::coefficient(long exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::specialize_one() const
{
    Rational sum;
    for (const auto& [e, c] : terms_)
        sum += c;
    return sum;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const
{
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

std::vector<LaurentTerm> LaurentPoly::serialize() const
{
    std::vector<LaurentTerm> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.push_back({e, c.numerator(), c.denominator()});
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first, the usual reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (c.sign() < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << '*';
        os << 'v';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (&o == this)
        return *this *= Rational(2);
    for (const auto& [e, c] : o.terms_)
        accumulate(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : o.terms_)
        accumulate(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.accumulate(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace {

// Polynomial long division on ordinary polynomials (all exponents >= 0).
// Returns {quotient, remainder}.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly num, const LaurentPoly& den)
{
    LaurentPoly quot;
    const long dd = den.max_exponent();
    const Rational& lead = den.leading_coefficient();
    while (!num.is_zero() && num.max_exponent() >= dd) {
        LaurentPoly t = LaurentPoly::monomial(num.max_exponent() - dd, num.leading_coefficient() / lead);
        quot += t;
        num -= t * den;
    }
    return {quot, num};
}

LaurentPoly make_monic(const LaurentPoly& p)
{
    return p * (Rational(1) / p.leading_coefficient());
}

}  // namespace

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        throw DomainError("Laurent division by zero");
    if (a.is_zero())
        return {};
    // Units of the Laurent ring are monomials, so shift both to ordinary
    // polynomials with nonzero constant term and divide there.
    const long sa = a.min_exponent();
    const long sb = b.min_exponent();
    auto [q, r] = poly_divmod(a.shifted(-sa), b.shifted(-sb));
    if (!r.is_zero())
        throw NotDivisibleError("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
    return q.shifted(sa - sb);
}

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() && b.is_zero())
        return {};
    if (a.is_zero())
        return make_monic(b.shifted(-b.min_exponent()));
    if (b.is_zero())
        return make_monic(a.shifted(-a.min_exponent()));
    LaurentPoly x = a.shifted(-a.min_exponent());
    LaurentPoly y = b.shifted(-b.min_exponent());
    while (!y.is_zero()) {
        LaurentPoly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

}  // namespace sl2
