#pragma once

#include "bch/dimension.hpp"

namespace bch {

// Derived quantities of lambda*delta feeding the large-delta Bose theorems.
struct BoseProfile {
    Int delta = 0;
    Int lam_d = 0;    // lambda * delta
    Int j_delta = 0;  // floor(log_q(lambda delta)) - h
    Digits digits;    // of lam_d, length h + j_delta + 1
    Int r_delta = 0;  // least index in the parity window with digit(h+r) > 0
    Int delta_hat = 0;
    Int head = 0;  // low-digit part compared against tail in the first branch
    Int tail = 0;
};

// Requires q not dividing delta and lambda*delta >= q^(m-h) (the range where
// the small-delta theorem no longer answers directly).
BoseProfile bose_profile(const BchParams& p, Int delta);

// d_B of the narrow-sense code, for 2 <= delta <= delta_max_bose.  Multiples
// of q first advance to delta+1 (same code); below (q^(m-h)-1)/lambda the
// distance is delta itself, above it the parity-specific theorem applies.
Int bose_distance(const BchParams& p, Int delta);

// lambda * delta = a q^(h+k) + b fast path; equals bose_distance.
Int bose_special_ab(const BchParams& p, Int k, Int a, Int b);

}  // namespace bch
