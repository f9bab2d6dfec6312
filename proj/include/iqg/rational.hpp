#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace iqg {

/* Arbitrary-precision exact arithmetic.  cpp_rational keeps every value
 * reduced (gcd of numerator and denominator is 1, denominator positive),
 * which is exactly the invariant the coefficient field needs. */
using BigInt      = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

/* gcd on rationals: the largest rational dividing both into integers,
 * gcd(p/q, r/s) = gcd(p s, r q) / (q s).  Used for content extraction. */
inline BigRational rational_gcd(const BigRational& a, const BigRational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    BigInt an = numerator(a), ad = denominator(a);
    BigInt bn = numerator(b), bd = denominator(b);
    return BigRational(int_gcd(an * bd, bn * ad), ad * bd);
}

}  // namespace iqg
