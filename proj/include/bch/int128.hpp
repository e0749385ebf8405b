#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bch/error.hpp"

namespace bch {

// All arithmetic in the library is exact.  Values up to q^m with q^m < 2^127
// must be representable, so the working integer type is 128-bit and every
// operation that could exceed it throws errc::overflow instead of wrapping.
using Int = __int128;

std::string to_string(Int x);
Int parse_int(const std::string& s);  // decimal with optional leading '-'

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer addition overflows 128 bits");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer subtraction overflows 128 bits");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer multiplication overflows 128 bits");
    return r;
}

// q^e, exact, with overflow detection.
Int checked_pow(Int q, Int e);

// Floor and ceiling division for possibly negative numerators.
inline Int floor_div(Int a, Int b) {
    Int quot = a / b, rem = a % b;
    if (rem != 0 && ((rem < 0) != (b < 0))) --quot;
    return quot;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Division that must be exact; a remainder means a closed form was
// mis-transcribed, so it is reported loudly rather than truncated.
inline Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0) fail(errc::arithmetic, "expected exact division");
    return a / b;
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Canonical representative of x mod m in [0, m-1].
inline Int mod_floor(Int x, Int m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace bch

std::ostream& operator<<(std::ostream& os, __int128 x);
