#pragma once

#include "sl2/rational.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2 {

class NotDivisibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One serialized term of a Laurent polynomial: exponent, numerator, denominator.
struct LaurentTerm {
    long exponent;
    mpz_class numerator;
    mpz_class denominator;
};

/**
 * Laurent polynomial in the quantum parameter v with exact rational coefficients.
 *
 * Stored as a map exponent -> coefficient with no zero coefficients, so the zero
 * polynomial is the empty map and equality is structural.
 */
class LaurentPoly {
public:
    using Terms = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { set(0, c); }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    /// c * v^exponent
    static LaurentPoly monomial(long exponent, const Rational& c = Rational(1));
    static LaurentPoly v() { return monomial(1); }
    static LaurentPoly from_terms(const std::vector<LaurentTerm>& terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coefficient(long exponent) const;
    /// Precondition: nonzero.
    long min_exponent() const { return terms_.begin()->first; }
    long max_exponent() const { return terms_.rbegin()->first; }
    const Rational& lowest_coefficient() const { return terms_.begin()->second; }
    const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

    /// Value at v = 1, the sum of all coefficients.
    Rational specialize_one() const;
    /// Image under v -> v^-1.
    LaurentPoly bar() const;
    /// Multiplication by v^k.
    LaurentPoly shifted(long k) const;

    std::vector<LaurentTerm> serialize() const;
    /// Compact text such as "v^3+2*v+2*v^-1+v^-3".
    std::string to_string() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    void set(long exponent, const Rational& c);
    void accumulate(long exponent, const Rational& c);

    Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in the Laurent ring. Throws DomainError when b is zero and
/// NotDivisibleError when no Laurent quotient exists.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor up to units (nonzero rationals times powers of v).
/// Normalized to a monic polynomial with lowest exponent 0; gcd(0, 0) = 0.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace sl2
