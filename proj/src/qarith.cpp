#include "sl2/qarith.hpp"

#include <string>

namespace sl2 {

LaurentPoly q_int(long n)
{
    if (n < 0)
        return -q_int(-n);
    LaurentPoly r;
    for (long e = n - 1; e >= 1 - n; e -= 2)
        r += LaurentPoly::monomial(e);
    return r;
}

LaurentPoly q_fact(long n)
{
    if (n < 0)
        throw DomainError("q_fact of negative integer " + std::to_string(n));
    LaurentPoly r(1);
    for (long i = 2; i <= n; ++i)
        r *= q_int(i);
    return r;
}

LaurentPoly q_binom(long n, long k)
{
    if (n < 0)
        throw DomainError("q_binom with negative n " + std::to_string(n));
    if (k < 0 || k > n)
        return {};
    return lp_div_exact(q_fact(n), q_fact(k) * q_fact(n - k));
}

}  // namespace sl2
