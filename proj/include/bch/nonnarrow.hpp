#pragma once

#include <optional>

#include "bch/dimension.hpp"

namespace bch {

// Eligibility data for the non-narrow-sense theorem at starting exponent b.
struct EligibilityReport {
    Int b = 0;
    Int j_b = 0;
    Int r_b = 0;
    Int head = 0;  // sum of digits of lambda*b below position h - j_b
    Int tail = 0;  // shifted top-block sum
    std::optional<Int> delta_max;  // present iff head > tail (strict)
};

// Requires (q^(m-h)-1)/lambda + 1 <= b < (q^(floor((2m-1)/3)+1)-1)/lambda.
EligibilityReport nonnarrow_report(const BchParams& p, Int b);

// delta_max when the theorem applies to C_(q,n,delta,b), none otherwise.
std::optional<Int> nonnarrow_eligible(const BchParams& p, Int b);

// For eligible b and 2 <= delta <= delta_max: the union of the delta-1
// consecutive cosets splits cleanly, so dim = n - m(delta-1) and d_B = delta.
Int nonnarrow_dimension(const BchParams& p, Int delta, Int b);
Int nonnarrow_bose(const BchParams& p, Int delta, Int b);

}  // namespace bch
