#pragma once

// Exact integer / rational arithmetic plus the handful of combinatorial
// helpers the rest of the library leans on.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "tuttelab/error.hpp"

namespace tuttelab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int pow_int(const Int& base, long e) {
    if (e < 0) fail("InvalidParameters", "pow_int: negative exponent");
    Int r = 1, b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

// Generalized binomial: integer upper index a (may be negative), lower b.
// C(a,b) = a(a-1)...(a-b+1)/b! for b >= 0, and 0 for b < 0.  For 0 <= a < b
// this yields 0, so it extends the usual "0 if b < 0 or b > a" convention
// and stays correct when a < 0 (falling-factorial definition).
inline Int binom(long a, long b) {
    if (b < 0) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < b; ++i) {
        num *= Int(a - i);
        den *= Int(i + 1);
    }
    if (den == 0) return 0;  // unreachable: b >= 0
    return num / den;        // exact: product of b consecutive integers
}

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace tuttelab
