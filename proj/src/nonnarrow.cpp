#include "bch/nonnarrow.hpp"

namespace bch {

EligibilityReport nonnarrow_report(const BchParams& p, Int b) {
    if (p.m < 4) fail(errc::unsupported_range, "non-narrow theorem requires m >= 4");
    Int lo = checked_sub(checked_pow(p.q, p.m - p.h), 1) / p.lambda + 1;
    Int hi = delta_max_bose(p);  // same bound (q^(floor((2m-1)/3)+1)-1)/lambda
    if (b < lo || b >= hi)
        fail(errc::unsupported_range,
             "b outside [" + to_string(lo) + ", " + to_string(hi) + "), the theorem's b-range");
    Int lam_b = checked_mul(p.lambda, b);
    EligibilityReport rep;
    rep.b = b;
    rep.j_b = ilog(lam_b, p.q) - p.h;
    Digits d = qadic_expand(lam_b, p.q, p.h + rep.j_b + 1);
    Int r = p.m - 2 * p.h - rep.j_b;
    while (d.at_power(p.h + r) == 0) ++r;
    rep.r_b = r;
    rep.head = d.weighted_sum(0, p.h - rep.j_b - 1, 0);
    rep.tail = d.weighted_sum(p.h - r, p.h + rep.j_b, p.h - r);
    if (rep.head > rep.tail) {
        // The digit structure forces fresh size-m cosets for every start in
        // [b, b + X - ceil(head/lambda)], X = (q^(h-j_b)-1)/lambda.  The
        // dimension formula needs b+delta-2 in that interval, d_B = delta
        // needs b+delta-1.  When lambda | head the defining set still grows
        // at the step past the interval (verified by the exhaustive sweep),
        // so delta_max gains one there.
        Int range = checked_sub(checked_pow(p.q, p.h - rep.j_b), 1) / p.lambda;
        Int bose_safe = range - ceil_div(rep.head, p.lambda) + 1;
        rep.delta_max = rep.head % p.lambda == 0 ? bose_safe + 1 : bose_safe;
    }
    return rep;
}

std::optional<Int> nonnarrow_eligible(const BchParams& p, Int b) {
    return nonnarrow_report(p, b).delta_max;
}

namespace {

Int check_nonnarrow(const BchParams& p, Int delta, Int b) {
    EligibilityReport rep = nonnarrow_report(p, b);
    if (!rep.delta_max)
        fail(errc::not_eligible, "b = " + to_string(b) + " fails the strict eligibility inequality");
    if (delta < 2 || delta > *rep.delta_max)
        fail(errc::unsupported_range,
             "delta outside [2, " + to_string(*rep.delta_max) + "] for b = " + to_string(b));
    return delta;
}

}  // namespace

Int nonnarrow_dimension(const BchParams& p, Int delta, Int b) {
    check_nonnarrow(p, delta, b);
    return checked_sub(p.n, checked_mul(p.m, delta - 1));
}

Int nonnarrow_bose(const BchParams& p, Int delta, Int b) {
    check_nonnarrow(p, delta, b);
    return delta;
}

}  // namespace bch
