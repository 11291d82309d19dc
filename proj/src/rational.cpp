#include "sl2/rational.hpp"

#include <climits>

namespace sl2 {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start)
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return mpz_class(digits, 10);
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::optional<long> Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p())
        return std::nullopt;
    return value_.get_num().get_si();
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace sl2
