#pragma once

#include "sl2/laurent.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace sl2 {

enum class Flavor { classical, quantum };

const char* to_string(Flavor f);

class FlavorMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Module coefficient: a rational for classical modules, a Laurent polynomial for quantum ones.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational r) : value_(std::move(r)) {}
    Scalar(LaurentPoly p) : value_(std::move(p)) {}

    static Scalar from_int(Flavor f, long c);
    static Scalar zero(Flavor f) { return from_int(f, 0); }
    static Scalar one(Flavor f) { return from_int(f, 1); }

    Flavor flavor() const { return std::holds_alternative<Rational>(value_) ? Flavor::classical : Flavor::quantum; }
    bool is_zero() const;

    const Rational& rational() const;
    const LaurentPoly& laurent() const;

    /// Classical value unchanged; quantum value evaluated at v = 1.
    Rational specialize_one() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

private:
    void require_same(const Scalar& o) const;

    std::variant<Rational, LaurentPoly> value_;
};

/// Exact quotient; Rational division for classical, lp_div_exact for quantum.
Scalar div_exact(const Scalar& a, const Scalar& b);

}  // namespace sl2
