#include "bch/classify.hpp"

#include "bch/cyclotomic.hpp"

namespace bch {

namespace {

struct BandContext {
    Int h = 0;
    Digits digits;  // of a, length h+k+1
};

// Shared validation for the band sets: parity, k and i windows, band bounds.
BandContext check_band(Int a, Int q, Int m, Int k, Int i, bool odd_m) {
    if (q < 2 || m < 4) fail(errc::value_out_of_range, "band sets require q >= 2 and m >= 4");
    if ((m % 2 == 1) != odd_m) fail(errc::wrong_parity, odd_m ? "A_k(i) requires odd m" : "B_k(i) requires even m");
    Int h = m / 2;
    if (k < m - 2 * h || k > band_k_max(m))
        fail(errc::bad_index, "band index k outside [m-2h, floor((2m-1)/3)-h]");
    Int i_lo = odd_m ? -k + 1 : -k;
    if (i < i_lo || i > k) fail(errc::bad_index, "sub-index i outside the set's range");
    Int lo = checked_pow(q, h + k);
    if (a < lo || a >= checked_mul(lo, q))
        fail(errc::band_mismatch, "a outside the band [q^(h+k), q^(h+k+1))");
    return BandContext{h, qadic_expand(a, q, h + k + 1)};
}

// Zero-block and boundary digit conditions common to both membership routes.
// For odd m the low block of the pattern has length k+i, for even m k+i+1.
bool pattern_holds(const BandContext& ctx, Int k, Int i, bool odd_m) {
    const Digits& d = ctx.digits;
    Int h = ctx.h;
    if (d.at_power(h + i) == 0) return false;
    if (d.at_power(0) == 0) return false;
    Int zero_lo = odd_m ? k + i : k + i + 1;
    for (Int ell = zero_lo; ell <= h + i - 1; ++ell)
        if (d.at_power(ell) != 0) return false;
    return true;
}

}  // namespace

Int band_k_max(Int m) { return (2 * m - 1) / 3 - m / 2; }

bool in_S_brute(Int a, Int q, Int m) {
    Int modulus = checked_sub(checked_pow(q, m), 1);
    if (a < 1 || a > modulus - 1) fail(errc::bad_range, "in_S_brute requires 1 <= a <= q^m-2");
    if (a % q == 0) return false;
    return !is_coset_leader(a, modulus, q);
}

bool in_H_brute(Int a, Int q, Int m) {
    if (m % 2 != 0) fail(errc::odd_m, "H is defined only for even m");
    Int modulus = checked_sub(checked_pow(q, m), 1);
    if (a < 1 || a > modulus - 1) fail(errc::bad_range, "in_H_brute requires 1 <= a <= q^m-2");
    if (!is_coset_leader(a, modulus, q)) return false;
    return coset(a, modulus, q).size == m / 2;
}

bool in_H_palindrome(Int a, Int q, Int m, Int k) {
    if (m % 2 != 0) fail(errc::odd_m, "in_H_palindrome requires even m");
    Int h = m / 2;
    if (k < 0 || k > band_k_max(m)) fail(errc::bad_index, "k outside [0, floor((2m-1)/3)-h]");
    Int lo = checked_pow(q, h + k);
    if (a < lo || a >= checked_mul(lo, q))
        fail(errc::band_mismatch, "a outside the band [q^(h+k), q^(h+k+1))");
    Digits d = qadic_expand(a, q, m);
    if (d.at_power(0) == 0 || d.at_power(k) == 0) return false;
    for (Int ell = k + 1; ell <= h - 1; ++ell)
        if (d.at_power(ell) != 0) return false;
    for (Int ell = 0; ell <= h - 1; ++ell)
        if (d.at_power(ell) != d.at_power(ell + h)) return false;
    return true;
}

bool in_A(Int a, Int q, Int m, Int k, Int i) {
    BandContext ctx = check_band(a, q, m, k, i, /*odd_m=*/true);
    if (!pattern_holds(ctx, k, i, true)) return false;
    Int h = ctx.h;
    Digits suffix = ctx.digits.slice_powers(k + i - 1, 0);
    Digits prefix = ctx.digits.slice_powers(h + k, h - i + 1);
    return lex_compare(suffix, prefix) <= 0;
}

bool in_B(Int a, Int q, Int m, Int k, Int i) {
    BandContext ctx = check_band(a, q, m, k, i, /*odd_m=*/false);
    if (!pattern_holds(ctx, k, i, false)) return false;
    Int h = ctx.h;
    Digits suffix = ctx.digits.slice_powers(k + i, 0);
    Digits prefix = ctx.digits.slice_powers(h + k, h - i);
    return lex_compare(suffix, prefix) <= 0;
}

bool in_A_arith(Int a, Int q, Int m, Int k, Int i) {
    BandContext ctx = check_band(a, q, m, k, i, /*odd_m=*/true);
    if (!pattern_holds(ctx, k, i, true)) return false;
    Int h = ctx.h;
    Int t = ctx.digits.weighted_sum(h + i, h + k, h + i);
    Int alpha = ctx.digits.weighted_sum(0, k + i - 1, 0);
    // floor(t*q^(2i-1)) with negative exponents as exact integer division
    Int bound = 2 * i - 1 >= 0 ? checked_mul(t, checked_pow(q, 2 * i - 1))
                               : t / checked_pow(q, 1 - 2 * i);
    return alpha >= 1 && alpha <= bound && alpha % q != 0;
}

bool in_B_arith(Int a, Int q, Int m, Int k, Int i) {
    BandContext ctx = check_band(a, q, m, k, i, /*odd_m=*/false);
    if (!pattern_holds(ctx, k, i, false)) return false;
    Int h = ctx.h;
    Int t = ctx.digits.weighted_sum(h + i, h + k, h + i);
    Int alpha = ctx.digits.weighted_sum(0, k + i, 0);
    Int bound = 2 * i >= 0 ? checked_mul(t, checked_pow(q, 2 * i)) : t / checked_pow(q, -2 * i);
    return alpha >= 1 && alpha <= bound && alpha % q != 0;
}

BandElement decompose(Int a, Int q, Int m, Int k, Int i) {
    bool member = m % 2 == 1 ? in_A(a, q, m, k, i) : in_B(a, q, m, k, i);
    if (!member) fail(errc::not_member, "decompose requires band membership for the given (k, i)");
    Int h = m / 2;
    Digits d = qadic_expand(a, q, h + k + 1);
    BandElement e;
    e.a = a;
    e.k = k;
    e.i = i;
    e.t = d.weighted_sum(h + i, h + k, h + i);
    Int alpha_hi = m % 2 == 1 ? k + i - 1 : k + i;
    e.alpha = d.weighted_sum(0, alpha_hi, 0);
    return e;
}

bool lambda_divides_via_parts(const BandElement& e, Int lambda) {
    if (lambda < 1) fail(errc::bad_lambda, "lambda must be positive");
    return (e.t + e.alpha) % lambda == 0;
}

}  // namespace bch
