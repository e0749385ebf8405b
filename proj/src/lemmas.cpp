#include "bch/lemmas.hpp"

#include "bch/intmath.hpp"

namespace bch {

namespace {

void check_lambda(Int lambda, Int q) {
    if (q < 2) fail(errc::value_out_of_range, "q must be >= 2");
    if (lambda < 1 || (q - 1) % lambda != 0) fail(errc::bad_lambda, "lambda must divide q-1");
}

}  // namespace

Int floor_mul_pow(Int t, Int q, Int e) {
    if (e >= 0) return checked_mul(t, checked_pow(q, e));
    return floor_div(t, checked_pow(q, -e));
}

Int count_shifted_multiples(Int x, Int y, Int lambda, Int q) {
    check_lambda(lambda, q);
    if (x < 1 || y < 1) fail(errc::value_out_of_range, "count_shifted_multiples requires x, y >= 1");
    return floor_div(x + y, lambda) - floor_div(x / q + y, lambda);
}

Int count_shifted_multiples_brute(Int x, Int y, Int lambda, Int q) {
    Int count = 0;
    for (Int alpha = 1; alpha <= x; ++alpha)
        if (alpha % q != 0 && (alpha + y) % lambda == 0) ++count;
    return count;
}

Int count_double_multiples(Int x, Int y, Int lambda, Int q) {
    check_lambda(lambda, q);
    if (x > y) fail(errc::bad_range, "count_double_multiples requires x <= y");
    if (lambda % 2 == 1) {
        return floor_div(y, lambda) - floor_div(x - 1, lambda) - floor_div(floor_div(y, q), lambda) +
               floor_div(ceil_div(x, q) - 1, lambda);
    }
    return floor_div(2 * y, lambda) - floor_div(2 * x - 2, lambda) -
           floor_div(2 * floor_div(y, q), lambda) + floor_div(2 * ceil_div(x, q) - 2, lambda);
}

Int count_double_multiples_brute(Int x, Int y, Int lambda, Int q) {
    Int count = 0;
    for (Int alpha = x; alpha <= y; ++alpha)
        if (mod_floor(2 * alpha, lambda) == 0 && mod_floor(alpha, q) != 0) ++count;
    return count;
}

Int sum_floor_diff(Int x, Int y, Int lambda, Int q) {
    check_lambda(lambda, q);
    return exact_div(checked_mul(q - 1, x - y), lambda);
}

Int sum_floor_diff_brute(Int x, Int y, Int lambda, Int q) {
    Int sum = 0;
    for (Int t = 1; t <= q - 1; ++t) sum += floor_div(t + x, lambda) - floor_div(t + y, lambda);
    return sum;
}

Int sum_carry_triangle(Int a, Int lambda, Int q) {
    check_lambda(lambda, q);
    if (a < 1) fail(errc::value_out_of_range, "sum_carry_triangle requires a >= 1");
    return exact_div(checked_mul(checked_mul(a, a - 1), q - 1), 2 * lambda);
}

Int sum_carry_triangle_brute(Int a, Int lambda, Int q) {
    Int sum = 0;
    for (Int t = q; t <= checked_mul(a, q); ++t) {
        if (t % q == 0) continue;
        sum += floor_div(t / q + t, lambda) - floor_div(t, lambda);
    }
    return sum;
}

Int sum_double_vs_single(Int x_even, Int lambda, Int q) {
    check_lambda(lambda, q);
    if (mod_floor(x_even, 2) != 0) fail(errc::odd_x, "sum_double_vs_single requires even x");
    if (lambda % 2 == 1) return exact_div(checked_mul(q, q - 1), 2 * lambda);
    return exact_div(checked_mul(q - 1, q + 1), 2 * lambda);
}

Int sum_double_vs_single_brute(Int x, Int lambda, Int q) {
    Int sum = 0;
    for (Int t = 1; t <= q - 1; ++t) sum += floor_div(2 * t + x, lambda) - floor_div(t + x, lambda);
    return sum;
}

Int sum_band_2t(Int k, Int a, Int lambda, Int q) {
    check_lambda(lambda, q);
    if (k < 1 || a < 1 || a > q) fail(errc::value_out_of_range, "sum_band_2t requires k >= 1, 1 <= a <= q");
    // (a^2-1)(q-1)^2 q^(2k-2) / (2 lambda) + (3+(-1)^lambda)(a-1)(q-1) q^(k-1) / (4 lambda)
    Int sign = lambda % 2 == 0 ? 1 : -1;
    Int term1 = checked_mul(checked_mul(a * a - 1, (q - 1) * (q - 1)), checked_pow(q, 2 * k - 2));
    Int term2 = checked_mul(checked_mul(3 + sign, (a - 1) * (q - 1)), checked_pow(q, k - 1));
    return exact_div(checked_add(checked_mul(term1, 2), term2), 4 * lambda);
}

Int sum_band_2t_brute(Int k, Int a, Int lambda, Int q) {
    Int sum = 0;
    Int lo = checked_pow(q, k);
    Int hi = checked_mul(a, lo) - 1;
    for (Int t = lo; t <= hi; ++t) {
        if (t % q == 0) continue;
        sum += floor_div(2 * t, lambda) - floor_div(t / q + t, lambda);
    }
    return sum;
}

Int sum_N_band(Int k, Int a, Int q) {
    if (q < 2) fail(errc::value_out_of_range, "q must be >= 2");
    if (k < 0 || a < 1 || a > q) fail(errc::value_out_of_range, "sum_N_band requires k >= 0, 1 <= a <= q");
    if (k == 0) return exact_div(checked_mul(a, a - 1), 2);
    return exact_div(checked_mul(checked_mul(a * a - 1, q - 1), checked_pow(q, 2 * k - 1)), 2);
}

Int sum_N_band_brute(Int k, Int a, Int q) {
    Int sum = 0;
    Int lo = checked_pow(q, k);
    Int hi = checked_mul(a, lo) - 1;
    for (Int t = lo; t <= hi; ++t) sum += count_nondiv(t + 1, q);
    return sum;
}

Int sum_band_shift(Int k, Int a, Int i, Int lambda, Int q, StepKind variant) {
    check_lambda(lambda, q);
    if (k < 1 || a < 1 || a > q)
        fail(errc::value_out_of_range, "sum_band_shift requires k >= 1, 1 <= a <= q");
    if (variant == StepKind::ODD_STEP) {
        if (i < -k + 1 || i > k) fail(errc::bad_index, "ODD_STEP requires i in [-k+1, k]");
        if (i == k || i == -k + 1)
            return exact_div(checked_mul(checked_mul(a * (a - 1), q - 1), checked_pow(q, 2 * k - 2)),
                             2 * lambda);
        return exact_div(checked_mul(checked_mul(a * a - 1, (q - 1) * (q - 1)), checked_pow(q, 2 * k - 3)),
                         2 * lambda);
    }
    if (i < -k || i > k) fail(errc::bad_index, "EVEN_STEP requires i in [-k, k]");
    if (i == 0) fail(errc::bad_index, "EVEN_STEP excludes i = 0");
    if (i == k || i == -k)
        return exact_div(checked_mul(checked_mul(a * (a - 1), q - 1), checked_pow(q, 2 * k - 1)),
                         2 * lambda);
    return exact_div(checked_mul(checked_mul(a * a - 1, (q - 1) * (q - 1)), checked_pow(q, 2 * k - 2)),
                     2 * lambda);
}

Int sum_band_shift_brute(Int k, Int a, Int i, Int lambda, Int q, StepKind variant) {
    Int e_hi = variant == StepKind::ODD_STEP ? 2 * i - 1 : 2 * i;
    Int sum = 0;
    Int lo = checked_pow(q, k - i);
    Int hi = checked_mul(a, lo) - 1;
    for (Int t = lo; t <= hi; ++t) {
        if (t % q == 0) continue;
        sum += floor_div(floor_mul_pow(t, q, e_hi) + t, lambda) -
               floor_div(floor_mul_pow(t, q, e_hi - 1) + t, lambda);
    }
    return sum;
}

}  // namespace bch
