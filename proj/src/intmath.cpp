#include "bch/intmath.hpp"

namespace bch {

Digits Digits::slice_powers(Int hi, Int lo) const {
    if (lo > hi) fail(errc::bad_range, "slice_powers expects lo <= hi");
    Digits out;
    out.base = base;
    out.digits.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int ell = hi; ell >= lo; --ell) out.digits.push_back(at_power(ell));
    return out;
}

Int Digits::weighted_sum(Int lo, Int hi, Int shift) const {
    Int sum = 0;
    for (Int ell = lo; ell <= hi; ++ell) {
        if (at_power(ell) == 0) continue;
        sum = checked_add(sum, checked_mul(at_power(ell), checked_pow(base, ell - shift)));
    }
    return sum;
}

Digits qadic_expand(Int a, Int q, Int len) {
    if (q < 2) fail(errc::value_out_of_range, "qadic_expand requires q >= 2");
    if (len < 1) fail(errc::value_out_of_range, "qadic_expand requires len >= 1");
    if (a < 0) fail(errc::value_out_of_range, "qadic_expand requires a >= 0");
    Digits d;
    d.base = q;
    d.digits.assign(static_cast<std::size_t>(len), 0);
    Int rest = a;
    for (Int ell = 0; ell < len; ++ell) {
        d.digits[static_cast<std::size_t>(len - 1 - ell)] = static_cast<int>(rest % q);
        rest /= q;
    }
    if (rest != 0)
        fail(errc::value_out_of_range,
             "qadic_expand: " + to_string(a) + " >= " + to_string(q) + "^" + to_string(len));
    return d;
}

Int qadic_value(const Digits& d) {
    if (d.base < 2) fail(errc::value_out_of_range, "qadic_value requires base >= 2");
    Int v = 0;
    for (int digit : d.digits) {
        if (digit < 0 || digit >= d.base) fail(errc::value_out_of_range, "digit outside [0, base-1]");
        v = checked_add(checked_mul(v, d.base), digit);
    }
    return v;
}

std::strong_ordering lex_compare(const Digits& u, const Digits& v) {
    if (u.len() != v.len()) fail(errc::length_mismatch, "lex_compare requires equal lengths");
    if (u.base != v.base) fail(errc::length_mismatch, "lex_compare requires equal bases");
    for (std::size_t i = 0; i < u.digits.size(); ++i) {
        if (u.digits[i] != v.digits[i]) return u.digits[i] <=> v.digits[i];
    }
    return std::strong_ordering::equal;
}

Int count_nondiv(Int a, Int q) {
    if (a < 1) fail(errc::value_out_of_range, "count_nondiv requires a >= 1");
    if (q < 2) fail(errc::value_out_of_range, "count_nondiv requires q >= 2");
    return (a - 1) - (a - 1) / q;
}

Int ilog(Int a, Int q) {
    if (a < 1) fail(errc::value_out_of_range, "ilog requires a >= 1");
    if (q < 2) fail(errc::value_out_of_range, "ilog requires q >= 2");
    Int e = 0;
    Int p = 1;
    while (p <= a / q) {
        p *= q;
        ++e;
    }
    return e;
}

}  // namespace bch
