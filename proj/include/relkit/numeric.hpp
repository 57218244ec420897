#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace relkit {

// Exact integer / rational arithmetic. Subset counts grow like C(M,k), which
// overflows 64-bit words around M = 67, so everything countable is kept in
// arbitrary precision and only converted to double at the output boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), exact; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r equals C(n - k + i, i) at this point
    }
    return r;
}

// Correctly rounded (nearest, ties to even) conversion to double. Boost's
// built-in conversion goes through separate numerator/denominator rounding
// and can be off by an ulp; the output contract wants the true nearest value.
inline double to_double_nearest(const Rational& r) {
    namespace mp = boost::multiprecision;
    if (r == 0) return 0.0;
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r); // > 0 in canonical form
    const bool neg = num < 0;
    if (neg) num = -num;

    // Scale so the integer quotient carries 54 or 55 significant bits: one or
    // two bits below the 53-bit target mantissa plus a sticky remainder.
    const long exp2 = static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den));
    const long shift = 54 - exp2;
    if (shift > 0) {
        num <<= shift;
    } else if (shift < 0) {
        den <<= -shift;
    }
    BigInt q, rem;
    mp::divide_qr(num, den, q, rem);

    const long drop = static_cast<long>(mp::msb(q)) + 1 - 53; // 1 or 2
    const BigInt low = q & ((BigInt(1) << drop) - 1);
    q >>= drop;
    const BigInt half = BigInt(1) << (drop - 1);
    if (low > half || (low == half && (rem != 0 || mp::bit_test(q, 0)))) {
        ++q;
    }
    const double mant = q.convert_to<double>(); // q <= 2^53, exact
    const double result = std::ldexp(mant, static_cast<int>(drop - shift));
    return neg ? -result : result;
}

inline double to_double_nearest(const BigInt& n) {
    return to_double_nearest(Rational(n));
}

} // namespace relkit
