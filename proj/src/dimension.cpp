#include "bch/dimension.hpp"

#include "bch/lemmas.hpp"

namespace bch {

namespace {

// Summand of the band double sums: for exponent pair (e, e-1),
// floor((floor(t q^e) + t)/lambda) - floor((floor(t q^(e-1)) + t)/lambda).
Int step_term(Int t, Int q, Int e, Int lambda) {
    return floor_div(floor_mul_pow(t, q, e) + t, lambda) -
           floor_div(floor_mul_pow(t, q, e - 1) + t, lambda);
}

// Sum of step terms over one T_i, skipping multiples of q.
Int t_range_sum(const TRange& r, Int q, Int lambda, bool odd_m) {
    Int e = odd_m ? 2 * r.i - 1 : 2 * r.i;
    Int sum = 0;
    for (Int t = r.t_min; t <= r.t_max; ++t) {
        if (t % q == 0) continue;
        sum = checked_add(sum, step_term(t, q, e, lambda));
    }
    return sum;
}

Int floor_pair(Int mu, Int w, Int q, Int lambda) {
    return floor_div(mu + w, lambda) - floor_div(mu / q + w, lambda);
}

void require_parity(const BchParams& p, bool odd) {
    if ((p.m % 2 == 1) != odd) fail(errc::wrong_parity, odd ? "operation requires odd m" : "operation requires even m");
}

Int three_plus_sign(Int lambda) { return lambda % 2 == 0 ? 4 : 2; }  // 3 + (-1)^lambda

}  // namespace

bool is_prime_power(Int q) {
    if (q < 2) return false;
    if (q > Int(1000000000000LL))
        fail(errc::value_out_of_range, "q too large for prime-power validation");
    Int p = 0;
    for (Int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return true;  // q itself prime
    Int rest = q;
    while (rest % p == 0) rest /= p;
    return rest == 1;
}

BchParams make_params(Int q, Int m, Int lambda) {
    if (!is_prime_power(q)) fail(errc::not_prime_power, "q = " + to_string(q) + " is not a prime power");
    if (m < 2) fail(errc::value_out_of_range, "m must be >= 2");
    if (lambda < 1 || (q - 1) % lambda != 0)
        fail(errc::bad_lambda, "lambda = " + to_string(lambda) + " does not divide q-1");
    BchParams p;
    p.q = q;
    p.m = m;
    p.lambda = lambda;
    p.n = (checked_sub(checked_pow(q, m), 1)) / lambda;
    p.h = m / 2;
    return p;
}

Int delta_max_dimension(const BchParams& p) { return delta_max_bose(p) + 1; }

Int delta_max_bose(const BchParams& p) {
    Int e = (2 * p.m - 1) / 3 + 1;
    return checked_sub(checked_pow(p.q, e), 1) / p.lambda;
}

DeltaProfile delta_profile(const BchParams& p, Int delta) {
    if (p.m < 4) fail(errc::unsupported_range, "dimension theorem requires m >= 4");
    if (delta < 2 || delta > delta_max_dimension(p))
        fail(errc::unsupported_range, "delta outside [2, " + to_string(delta_max_dimension(p)) +
                                          "], the proven dimension range");
    DeltaProfile prof;
    prof.delta = delta;
    prof.lam_dm1 = checked_mul(p.lambda, delta - 1);
    prof.k_delta = ilog(prof.lam_dm1, p.q) - p.h;
    prof.digits = qadic_expand(prof.lam_dm1, p.q, p.h + prof.k_delta + 1);
    bool odd = p.m % 2 == 1;
    Int k = prof.k_delta;
    if (k < p.m - 2 * p.h) return prof;  // small-delta branch: nothing else is defined

    Int s = p.m - 2 * p.h - k;
    while (prof.digits.at_power(p.h + s) == 0) ++s;  // leading digit guarantees termination
    prof.s_delta = s;
    Int w = prof.digits.weighted_sum(p.h + s, p.h + k, 0);
    prof.w_delta = w;
    if (odd) {
        prof.mu = std::min(prof.digits.weighted_sum(0, p.h - k, 0),
                           prof.digits.weighted_sum(p.h - s + 1, p.h + k, p.h - s + 1));
    } else {
        prof.mu_tilde = std::min(prof.digits.weighted_sum(0, p.h - k - 1, 0),
                                 prof.digits.weighted_sum(p.h - s, p.h + k, p.h - s));
        prof.phi = prof.digits.weighted_sum(p.h, p.h + k, p.h) - 1;
    }
    Int i_lo = odd ? -k + 1 : -k;
    for (Int i = i_lo; i <= k; ++i) {
        TRange r;
        r.i = i;
        r.t_min = checked_pow(p.q, k - i);
        r.t_max = floor_div(w - 1, checked_pow(p.q, p.h + i));
        prof.t_sets.push_back(r);
    }
    return prof;
}

Int f_odd(const BchParams& p, const DeltaProfile& prof) {
    require_parity(p, true);
    if (!prof.s_delta) return 0;  // delta <= (q^(h+1)-1)/lambda + 1
    Int q = p.q, lambda = p.lambda, k = prof.k_delta;
    Int head = k == 1 ? 0
                      : exact_div(checked_mul((q - 1) * (q - 1) * (k - 1), checked_pow(q, 2 * k - 3)),
                                  lambda);
    Int sum = 0;
    for (const TRange& r : prof.t_sets) sum = checked_add(sum, t_range_sum(r, q, lambda, true));
    return head + floor_pair(*prof.mu, *prof.w_delta, q, lambda) + sum;
}

Int f_even(const BchParams& p, const DeltaProfile& prof) {
    require_parity(p, false);
    if (!prof.s_delta) return 0;  // delta <= (q^h-1)/lambda + 1
    Int q = p.q, lambda = p.lambda, k = prof.k_delta;
    Int head = 0;
    if (k >= 1) {
        // |[1, q^(h+k)) cap (S u H) cap D_lambda| =
        // q^(2k-2) (k - 1/2) (q-1)^2 / lambda + (3+(-1)^lambda)(q-1) q^(k-1) / (4 lambda),
        // i.e. the sum of the per-band counts over k' < k plus the base band.
        Int num = checked_mul(2 * (2 * k - 1) * (q - 1) * (q - 1), checked_pow(q, 2 * k - 2));
        num = checked_add(num, checked_mul(three_plus_sign(lambda) * (q - 1), checked_pow(q, k - 1)));
        head = exact_div(num, 4 * lambda);
    }
    Int sum = 0;
    for (const TRange& r : prof.t_sets) sum = checked_add(sum, t_range_sum(r, q, lambda, false));
    return head + floor_pair(*prof.mu_tilde, *prof.w_delta, q, lambda) + sum;
}

Int tau(const BchParams& p, const DeltaProfile& prof) {
    require_parity(p, false);
    const Digits& d = prof.digits;
    Int k = prof.k_delta;
    if (d.at_power(p.h) == 0) return 0;
    Int high = d.weighted_sum(p.h, p.h + std::max(k, Int(0)), p.h);
    Int low = d.weighted_sum(0, p.h - 1, 0);
    if (high > low) return 0;
    Int digit_sum = 0;
    for (Int ell = p.h; ell <= p.h + k; ++ell) digit_sum += d.at_power(ell);
    return 2 * digit_sum % p.lambda == 0 ? 1 : 0;
}

Int g_even(const BchParams& p, const DeltaProfile& prof) {
    require_parity(p, false);
    if (!prof.s_delta) return 0;
    Int lambda = p.lambda, q = p.q;
    Int c = three_plus_sign(lambda);
    if (prof.k_delta == 0)
        return floor_div(c * (prof.digits.at_power(p.h) - 1), 2 * lambda) + tau(p, prof);
    Int phi = *prof.phi;
    return floor_div(c * phi, 2 * lambda) - floor_div(c * (phi / q), 2 * lambda) + tau(p, prof);
}

Int dimension(const BchParams& p, Int delta) {
    DeltaProfile prof = delta_profile(p, delta);
    Int nd = count_nondiv(delta, p.q);
    if (p.m % 2 == 1) return checked_sub(p.n, checked_mul(p.m, nd - f_odd(p, prof)));
    Int dim = checked_sub(p.n, checked_mul(p.m, nd - f_even(p, prof)));
    return checked_sub(dim, checked_mul(p.m / 2, g_even(p, prof)));
}

Int dimension_even_small(const BchParams& p, Int delta) {
    require_parity(p, false);
    if (p.m < 4) fail(errc::unsupported_range, "requires m >= 4");
    Int q = p.q, lambda = p.lambda;
    Int top = checked_sub(checked_pow(q, p.h + 1), 1) / lambda + 1;
    if (delta < 2 || delta > top)
        fail(errc::unsupported_range, "delta outside [2, " + to_string(top) + "]");
    Int nd = count_nondiv(delta, q);
    Int base = checked_sub(p.n, checked_mul(p.m, nd));
    if (delta <= checked_sub(checked_pow(q, p.h), 1) / lambda + 1) return base;

    Digits d = qadic_expand(checked_mul(lambda, delta - 1), q, p.h + 1);
    Int dh = d.at_power(p.h);
    Int low = d.weighted_sum(0, p.h - 1, 0);
    Int twos = 0;  // sum_{t=1}^{dh} [floor(2t/lambda) - floor(t/lambda)]
    for (Int t = 1; t <= dh; ++t) twos += 2 * t / lambda - t / lambda;
    Int half_count = floor_div(three_plus_sign(lambda) * (dh - 1), 2 * lambda);
    if (dh <= low) {
        Int dim = base + checked_mul(p.m, twos) - checked_mul(p.m / 2, half_count);
        if (2 * dh % lambda == 0) dim -= p.m / 2;
        return dim;
    }
    Int extra = floor_div(d.at_power(0) + dh, lambda) - floor_div(2 * dh, lambda);
    return base + checked_mul(p.m, twos + extra) - checked_mul(p.m / 2, half_count);
}

Int dimension_odd_small(const BchParams& p, Int delta) {
    require_parity(p, true);
    if (p.m < 5) fail(errc::unsupported_range, "requires odd m >= 5");
    Int q = p.q, lambda = p.lambda;
    Int top = checked_sub(checked_pow(q, p.h + 2), 1) / lambda + 1;
    if (delta < 2 || delta > top)
        fail(errc::unsupported_range, "delta outside [2, " + to_string(top) + "]");
    Int nd = count_nondiv(delta, q);
    Int base = checked_sub(p.n, checked_mul(p.m, nd));
    if (delta <= checked_sub(checked_pow(q, p.h + 1), 1) / lambda + 1) return base;

    Digits d = qadic_expand(checked_mul(lambda, delta - 1), q, p.h + 2);
    Int dh = d.at_power(p.h);
    Int dh1 = d.at_power(p.h + 1);
    Int low = d.weighted_sum(0, p.h - 1, 0);
    if (dh > 0) {
        Int steps = 0;  // sum_{i=1}^{dh} [floor((2 dh1 + i)/lambda) - floor((dh1 + i)/lambda)]
        for (Int i = 1; i <= dh; ++i) steps += (2 * dh1 + i) / lambda - (dh1 + i) / lambda;
        Int f = exact_div(dh1 * dh1 * (q - 1), lambda) + steps;
        if (dh1 > low) f += floor_div(d.at_power(0) + dh1 + dh, lambda) - floor_div(2 * dh1 + dh, lambda);
        return base + checked_mul(p.m, f);
    }
    Int f = exact_div(dh1 * dh1 * (q - 1), lambda);
    if (checked_mul(dh1, q) > low) {
        f = exact_div((dh1 * dh1 - dh1 + d.at_power(1)) * (q - 1), lambda) +
            floor_div(d.at_power(1) + d.at_power(0) + dh1, lambda) -
            floor_div(d.at_power(1) + dh1, lambda);
    }
    return base + checked_mul(p.m, f);
}

Int special_ab_delta(const BchParams& p, Int k, Int a, Int b) {
    if (p.m < 4) fail(errc::unsupported_range, "requires m >= 4");
    bool odd = p.m % 2 == 1;
    Int k_lo = odd ? 1 : 0;
    if (k < k_lo || k > (2 * p.m - 1) / 3 - p.h)
        fail(errc::unsupported_range, "k outside the corollary's band range");
    if (a < 1 || a > p.q - 1) fail(errc::unsupported_range, "a outside [1, q-1]");
    Int b_top = checked_pow(p.q, p.m - p.h - k);
    if (b < p.lambda || b > b_top) fail(errc::unsupported_range, "b outside [lambda, q^(m-h-k)]");
    if (b % p.q == 0) fail(errc::unsupported_range, "q must not divide b");
    Int lam_delta = checked_add(checked_mul(a, checked_pow(p.q, p.h + k)), b);
    if (lam_delta % p.lambda != 0)
        fail(errc::not_an_integer, "lambda does not divide a*q^(h+k)+b");
    return lam_delta / p.lambda;
}

Int dimension_special_ab(const BchParams& p, Int k, Int a, Int b) {
    Int delta = special_ab_delta(p, k, a, b);
    Int q = p.q, lambda = p.lambda, m = p.m;
    Int nd = count_nondiv(delta, q);
    if (m % 2 == 1) {
        // q^(2k-3) can be a half-power at k=1; evaluate over denominator lambda*q^3.
        Int q2k = checked_pow(q, 2 * k);
        if (b >= checked_mul(a, checked_pow(q, 2 * k - 1)) + lambda) {
            Int num = checked_mul(checked_mul(m * a * a * (q - 1), q2k), (q - 1) * k + 1);
            return checked_sub(p.n, checked_mul(m, nd)) + exact_div(num, lambda * q * q * q);
        }
        Int lead = exact_div(checked_mul(m * a * (q - 1), checked_pow(q, p.h + k - 1)), lambda);
        Int num = checked_mul(checked_mul(m * a * (q - 1), q2k), a * (q - 1) * k + a - q);
        return checked_sub(p.n, lead) + exact_div(num, lambda * q * q * q);
    }
    if (k == 0) {
        Int twos = 0;
        for (Int t = 1; t <= a; ++t) twos += 2 * t / lambda - t / lambda;
        Int half_count = floor_div(three_plus_sign(lambda) * (a - 1), 2 * lambda);
        Int dim = checked_sub(p.n, checked_mul(m, nd)) - checked_mul(m / 2, half_count);
        if (b < a + lambda) {
            return dim + checked_mul(m, exact_div(a + b - lambda, lambda) - floor_div(2 * a, lambda) + twos);
        }
        dim += checked_mul(m, twos);
        if (2 * a % lambda == 0) dim -= m / 2;
        return dim;
    }
    // k >= 1: denominators are 2*lambda throughout.  With the corrected band
    // constant in f_even, the even-lambda case carries no extra term.
    Int q2k2 = checked_pow(q, 2 * k - 2);
    if (b > checked_mul(a, checked_pow(q, 2 * k)) + lambda) {
        Int num = checked_mul(checked_mul(m * a * a * (q - 1), q2k2), (2 * k - 1) * (q - 1) + 2 * q);
        return checked_sub(p.n, checked_mul(m, nd)) + exact_div(num, 2 * lambda);
    }
    Int num = checked_mul(checked_mul(m * a * (q - 1), q2k2),
                          a * (2 * k - 1) * (q - 1) + 2 * (a - 1) * q);
    Int lead = exact_div(checked_mul(m * a * (q - 1), checked_pow(q, p.h + k - 1)), lambda);
    return checked_sub(p.n, lead) + exact_div(num, 2 * lambda);
}

Int assertion3_count(const BchParams& p, Int k, Int i) {
    Int q = p.q, lambda = p.lambda;
    if (k < 1 || k > (2 * p.m - 1) / 3 - p.h)
        fail(errc::bad_index, "assertion3_count requires 1 <= k <= floor((2m-1)/3)-h");
    if (p.m % 2 == 1) {
        if (i < -k + 1 || i > k) fail(errc::bad_index, "i outside [-k+1, k]");
        if (i == k || i == -k + 1)
            return exact_div(checked_mul((q - 1) * (q - 1), checked_pow(q, 2 * k - 1)), 2 * lambda);
        return exact_div(checked_mul((q - 1) * (q - 1) * (q - 1) * (q + 1), checked_pow(q, 2 * k - 3)),
                         2 * lambda);
    }
    if (i < -k || i > k) fail(errc::bad_index, "i outside [-k, k]");
    if (i == 0) fail(errc::bad_index, "i = 0 for even m is assertion4_count's case");
    if (i == k || i == -k)
        return exact_div(checked_mul((q - 1) * (q - 1), checked_pow(q, 2 * k)), 2 * lambda);
    return exact_div(checked_mul((q - 1) * (q - 1) * (q - 1) * (q + 1), checked_pow(q, 2 * k - 2)),
                     2 * lambda);
}

Int assertion4_count(const BchParams& p, Int k) {
    require_parity(p, false);
    Int q = p.q, lambda = p.lambda;
    if (k < 0 || k > (2 * p.m - 1) / 3 - p.h) fail(errc::bad_index, "k outside [0, floor((2m-1)/3)-h]");
    bool even_lambda = lambda % 2 == 0;
    if (k == 0) {
        Int num = even_lambda ? (q + 1) * (q - 1) : q * (q - 1);
        return exact_div(num, 2 * lambda);
    }
    Int inner = checked_sub(checked_pow(q, 2 * k), checked_pow(q, 2 * k - 2));
    inner = checked_add(inner, checked_mul(even_lambda ? 2 : 1, checked_pow(q, k - 1)));
    return exact_div(checked_mul((q - 1) * (q - 1), inner), 2 * lambda);
}

Int assertion5_count(const BchParams& p, Int k) {
    require_parity(p, false);
    Int q = p.q, lambda = p.lambda;
    if (k < 0 || k > (2 * p.m - 1) / 3 - p.h) fail(errc::bad_index, "k outside [0, floor((2m-1)/3)-h]");
    Int scale = lambda % 2 == 0 ? 2 : 1;
    if (k == 0) return exact_div(scale * (q - 1), lambda);
    return exact_div(checked_mul(scale * (q - 1) * (q - 1), checked_pow(q, k - 1)), lambda);
}

AssertionCounts count_assertions(const BchParams& p, Int delta) {
    DeltaProfile prof = delta_profile(p, delta);
    AssertionCounts out;
    bool odd = p.m % 2 == 1;
    if (!odd) {
        out.tail_segment_h = 0;
        out.band_head_h = 0;
    }
    if (!prof.s_delta) return out;  // below (q^(m-h)-1)/lambda + 1: all counts vanish

    Int q = p.q, lambda = p.lambda, k = prof.k_delta;
    Int mu_val = odd ? *prof.mu : *prof.mu_tilde;
    out.tail_segment = floor_pair(mu_val, *prof.w_delta, q, lambda);
    Int band_head = 0;
    for (const TRange& r : prof.t_sets) band_head += t_range_sum(r, q, lambda, odd);
    out.band_head = band_head;
    if (!odd) {
        out.tail_segment_h = tau(p, prof);
        Int c = three_plus_sign(lambda);
        if (k == 0) {
            out.band_head_h = floor_div(c * (prof.digits.at_power(p.h) - 1), 2 * lambda);
        } else {
            Int phi = *prof.phi;
            out.band_head_h =
                floor_div(c * phi, 2 * lambda) - floor_div(c * (phi / q), 2 * lambda) -
                exact_div(checked_mul(c * (q - 1), checked_pow(q, k - 1)), 2 * lambda);
        }
        out.band_zero = assertion4_count(p, k);
        out.band_h = assertion5_count(p, k);
    }
    if (k >= 1) {
        Int i_lo = odd ? -k + 1 : -k;
        for (Int i = i_lo; i <= k; ++i) {
            if (!odd && i == 0) continue;
            out.band_sets.emplace_back(i, assertion3_count(p, k, i));
        }
    }
    return out;
}

}  // namespace bch
