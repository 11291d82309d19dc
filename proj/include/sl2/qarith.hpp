#pragma once

#include "sl2/laurent.hpp"

namespace sl2 {

/// Balanced quantum integer [n] = (v^n - v^-n) / (v - v^-1); [0] = 0, [-n] = -[n].
LaurentPoly q_int(long n);

/// [n]! = [n][n-1]...[1], [0]! = 1. Throws DomainError for negative n.
LaurentPoly q_fact(long n);

/// [n]! / ([k]! [n-k]!) for 0 <= k <= n, zero outside that range.
LaurentPoly q_binom(long n, long k);

/// Evaluation at v = 1.
inline Rational specialize_one(const LaurentPoly& p) { return p.specialize_one(); }

}  // namespace sl2
