#include "bch/bose.hpp"

namespace bch {

BoseProfile bose_profile(const BchParams& p, Int delta) {
    if (p.m < 4) fail(errc::unsupported_range, "Bose theorems require m >= 4");
    if (delta % p.q == 0) fail(errc::q_divides_delta, "profile requires q not dividing delta");
    Int lam_d = checked_mul(p.lambda, delta);
    if (lam_d < checked_pow(p.q, p.m - p.h))
        fail(errc::unsupported_range, "profile only defined for lambda*delta >= q^(m-h)");
    if (delta > delta_max_bose(p))
        fail(errc::unsupported_range,
             "delta outside [2, " + to_string(delta_max_bose(p)) + "], the proven Bose range");
    BoseProfile prof;
    prof.delta = delta;
    prof.lam_d = lam_d;
    prof.j_delta = ilog(lam_d, p.q) - p.h;
    prof.digits = qadic_expand(lam_d, p.q, p.h + prof.j_delta + 1);
    const Digits& d = prof.digits;
    Int h = p.h, j = prof.j_delta;
    bool odd = p.m % 2 == 1;
    Int r = odd ? -j + 1 : -j;
    while (d.at_power(h + r) == 0) ++r;  // leading digit bounds the search at r = j
    prof.r_delta = r;
    Int shift = odd ? h - r + 1 : h - r;
    prof.delta_hat = checked_add(d.weighted_sum(h + r, h + j, 0), d.weighted_sum(shift, h + j, shift));
    prof.head = d.weighted_sum(0, odd ? h - j : h - j - 1, 0);
    prof.tail = d.weighted_sum(shift, h + j, shift);
    return prof;
}

Int bose_distance(const BchParams& p, Int delta) {
    if (p.m < 4) fail(errc::unsupported_range, "Bose theorems require m >= 4");
    Int top = delta_max_bose(p);
    if (delta < 2 || delta > top)
        fail(errc::unsupported_range, "delta outside [2, " + to_string(top) + "], the proven Bose range");
    while (delta % p.q == 0) {
        // a multiple of q is never a coset leader: same code as delta+1
        if (++delta > top)
            fail(errc::unsupported_range, "q | delta at the top of the proven Bose range");
    }
    if (delta <= checked_sub(checked_pow(p.q, p.m - p.h), 1) / p.lambda) return delta;

    BoseProfile prof = bose_profile(p, delta);
    Int lambda = p.lambda, q = p.q;
    Int base = floor_div(prof.delta_hat, lambda);
    if (p.m % 2 == 1) {
        if (prof.head > prof.tail) return delta;
        Int lhs = prof.digits.at_power(p.h - prof.r_delta + 1) + lambda - q;
        return lhs != mod_floor(prof.delta_hat, lambda) ? base + 1 : base + 2;
    }
    if (prof.r_delta != 0) {
        if (prof.head > prof.tail) return delta;
        Int lhs = prof.digits.at_power(p.h - prof.r_delta) + lambda - q;
        return lhs != mod_floor(prof.delta_hat, lambda) ? base + 1 : base + 2;
    }
    if (prof.head >= prof.tail) return delta;
    if (prof.delta_hat % lambda == 0) return base;
    Int lhs = prof.digits.at_power(p.h) + lambda - q;
    return lhs != mod_floor(prof.delta_hat, lambda) ? base + 1 : base + 2;
}

Int bose_special_ab(const BchParams& p, Int k, Int a, Int b) {
    Int q = p.q, lambda = p.lambda;
    Int delta = special_ab_delta(p, k, a, b);
    if (p.m % 2 == 1) {
        Int pivot = checked_mul(a, checked_pow(q, 2 * k - 1));
        if (b > pivot) return delta;
        return floor_div(checked_add(checked_mul(a, checked_pow(q, p.h + k)), pivot), lambda) + 1;
    }
    if (k == 0) {
        if (b >= a) return delta;
        Int hat = checked_mul(a, checked_pow(q, p.h) + 1);  // a q^h + a
        if (2 * a % lambda == 0) return exact_div(hat, lambda);
        return a + lambda - q != mod_floor(2 * a, lambda) ? floor_div(hat, lambda) + 1
                                                          : floor_div(hat, lambda) + 2;
    }
    Int pivot = checked_mul(a, checked_pow(q, 2 * k));
    if (b > pivot) return delta;
    Int base = floor_div(checked_add(checked_mul(a, checked_pow(q, p.h + k)), pivot), lambda);
    // digit h-k of lambda*delta is 0 here (b < q^(h-k)), so the residue
    // comparison reads lambda - q, which is negative: the +2 case never fires
    return lambda - q != mod_floor(2 * a, lambda) ? base + 1 : base + 2;
}

}  // namespace bch
