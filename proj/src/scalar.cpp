#include "sl2/scalar.hpp"

namespace sl2 {

const char* to_string(Flavor f) { return f == Flavor::classical ? "classical" : "quantum"; }

Scalar Scalar::from_int(Flavor f, long c)
{
    if (f == Flavor::classical)
        return Scalar(Rational(c));
    return Scalar(LaurentPoly(c));
}

bool Scalar::is_zero() const
{
    return std::visit([](const auto& x) { return x.is_zero(); }, value_);
}

const Rational& Scalar::rational() const
{
    if (auto* r = std::get_if<Rational>(&value_))
        return *r;
    throw FlavorMismatch("expected a classical scalar");
}

const LaurentPoly& Scalar::laurent() const
{
    if (auto* p = std::get_if<LaurentPoly>(&value_))
        return *p;
    throw FlavorMismatch("expected a quantum scalar");
}

Rational Scalar::specialize_one() const
{
    if (auto* r = std::get_if<Rational>(&value_))
        return *r;
    return std::get<LaurentPoly>(value_).specialize_one();
}

std::string Scalar::to_string() const
{
    return std::visit([](const auto& x) { return x.to_string(); }, value_);
}

void Scalar::require_same(const Scalar& o) const
{
    if (value_.index() != o.value_.index())
        throw FlavorMismatch(std::string("mixed scalar flavors: ") + sl2::to_string(flavor()) + " and "
                             + sl2::to_string(o.flavor()));
}

Scalar Scalar::operator-() const
{
    return std::visit([](const auto& x) { return Scalar(-x); }, value_);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same(o);
    std::visit([&](auto& x) { x += std::get<std::decay_t<decltype(x)>>(o.value_); }, value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same(o);
    std::visit([&](auto& x) { x -= std::get<std::decay_t<decltype(x)>>(o.value_); }, value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same(o);
    std::visit([&](auto& x) { x = x * std::get<std::decay_t<decltype(x)>>(o.value_); }, value_);
    return *this;
}

Scalar div_exact(const Scalar& a, const Scalar& b)
{
    if (a.flavor() != b.flavor())
        throw FlavorMismatch("mixed scalar flavors in division");
    if (a.flavor() == Flavor::classical)
        return Scalar(a.rational() / b.rational());
    return Scalar(lp_div_exact(a.laurent(), b.laurent()));
}

}  // namespace sl2
