#pragma once

#include <compare>
#include <vector>

#include "bch/int128.hpp"

namespace bch {

// Big-endian base-q digit vector of fixed length.  digits[0] is the most
// significant position, mirroring the usual way V(a) is written down.
struct Digits {
    Int base = 0;
    std::vector<int> digits;  // each in [0, base-1]

    Int len() const { return static_cast<Int>(digits.size()); }

    // Digit at power ell (0 = least significant); zero beyond the stored length.
    int at_power(Int ell) const {
        if (ell < 0 || ell >= len()) return 0;
        return digits[static_cast<std::size_t>(len() - 1 - ell)];
    }

    // Sub-vector covering powers [lo, hi], most significant first.
    Digits slice_powers(Int hi, Int lo) const;

    // Sum of d_ell * q^(ell - shift) over powers ell in [lo, hi]; shift <= lo.
    Int weighted_sum(Int lo, Int hi, Int shift) const;

    bool operator==(const Digits&) const = default;
};

// q-adic expansion of a with exactly `len` digits, leading zeros preserved.
Digits qadic_expand(Int a, Int q, Int len);

// Inverse of qadic_expand.
Int qadic_value(const Digits& d);

// Lexicographic comparison from the most significant digit; agrees with
// integer comparison of qadic_value for equal-shape inputs.
std::strong_ordering lex_compare(const Digits& u, const Digits& v);

// N(a): the number of integers in [1, a-1] not divisible by q,
// i.e. (a-1) - floor((a-1)/q).
Int count_nondiv(Int a, Int q);

// Largest e with q^e <= a (exact integer log).
Int ilog(Int a, Int q);

}  // namespace bch
