#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bch/intmath.hpp"

namespace bch {

// Parameters of the code family member: length n = (q^m - 1) / lambda over
// F_q, with h = floor(m/2) the pivot index of all band decompositions.
struct BchParams {
    Int q = 0;
    Int m = 0;
    Int lambda = 0;
    Int n = 0;
    Int h = 0;

    Int modulus() const { return checked_mul(lambda, n); }  // q^m - 1
};

bool is_prime_power(Int q);

// Validates q (prime power), m >= 2, lambda | q-1 and derives n, h.
BchParams make_params(Int q, Int m, Int lambda);

// Largest designed distance covered by the dimension theorem:
// (q^(floor((2m-1)/3)+1) - 1) / lambda + 1.  The Bose theorems stop one lower.
Int delta_max_dimension(const BchParams& p);
Int delta_max_bose(const BchParams& p);

// The index set T_i: t in [t_min, t_max] with q not dividing t.
struct TRange {
    Int i = 0;
    Int t_min = 0;
    Int t_max = 0;  // may be < t_min (empty)
};

// Derived quantities of lambda*(delta-1) feeding the dimension theorem.
// Fields a branch does not define are absent rather than defaulted:
// s_delta and friends exist only once k_delta >= m - 2h.
struct DeltaProfile {
    Int delta = 0;
    Int lam_dm1 = 0;   // lambda * (delta - 1)
    Int k_delta = 0;   // q^(h+k) <= lam_dm1 < q^(h+k+1)
    Digits digits;     // of lam_dm1, length h + k_delta + 1
    std::optional<Int> s_delta;
    std::optional<Int> w_delta;
    std::optional<Int> mu;        // odd m
    std::optional<Int> mu_tilde;  // even m
    std::optional<Int> phi;       // even m, k_delta >= 0
    std::vector<TRange> t_sets;   // i in [-k+1,k] (odd) / [-k,k] (even)
};

DeltaProfile delta_profile(const BchParams& p, Int delta);

// The counting functions of the dimension theorem.  f_odd(delta) equals
// |[1, lambda(delta-1)] cap S cap D_lambda| (odd m); f_even is the analogue
// for S-union-H, g_even for H alone, and tau is the single-point H indicator
// for the top digit block.
Int f_odd(const BchParams& p, const DeltaProfile& prof);
Int f_even(const BchParams& p, const DeltaProfile& prof);
Int tau(const BchParams& p, const DeltaProfile& prof);
Int g_even(const BchParams& p, const DeltaProfile& prof);

// dim C_(q,n,delta) for m >= 4 and 2 <= delta <= delta_max_dimension.
Int dimension(const BchParams& p, Int delta);

// Specialised small-delta formulas; each equals dimension() on its domain.
Int dimension_even_small(const BchParams& p, Int delta);  // even m, delta <= (q^(h+1)-1)/lambda + 1
Int dimension_odd_small(const BchParams& p, Int delta);   // odd m >= 5, delta <= (q^(h+2)-1)/lambda + 1
// lambda * delta = a * q^(h+k) + b with 1 <= a <= q-1, lambda <= b <= q^(m-h-k), q not| b.
// special_ab_delta validates the tuple and returns delta; shared by the
// dimension and Bose fast paths so both gate identically.
Int special_ab_delta(const BchParams& p, Int k, Int a, Int b);
Int dimension_special_ab(const BchParams& p, Int k, Int a, Int b);

// Closed-form counts behind the theorem, each checkable against brute
// set enumeration.  Counts that need s_delta are zero below the threshold
// delta <= (q^(m-h)-1)/lambda + 1; the H-specific fields exist for even m.
struct AssertionCounts {
    Int tail_segment = 0;                        // [w, lam_dm1] cap S(/S,H) cap D
    std::optional<Int> tail_segment_h;           // even m: same interval from digit h, cap H
    Int band_head = 0;                           // [q^(h+k), w) cap S(/S,H) cap D
    std::optional<Int> band_head_h;              // even m: [q^(h+k), (phi+1) q^h) cap H cap D
    std::vector<std::pair<Int, Int>> band_sets;  // (i, |A/B_k(i) cap D|) at k = k_delta >= 1
    std::optional<Int> band_zero;                // even m: |B_k(0) cap D| at k = k_delta
    std::optional<Int> band_h;                   // even m: band cap H cap D at k = k_delta
};

AssertionCounts count_assertions(const BchParams& p, Int delta);

// The per-band closed forms, independent of delta.
Int assertion3_count(const BchParams& p, Int k, Int i);  // |A_k(i) cap D| / |B_k(i) cap D|, i != 0 for even m
Int assertion4_count(const BchParams& p, Int k);         // |B_k(0) cap D|, even m
Int assertion5_count(const BchParams& p, Int k);         // |[q^(h+k), q^(h+k+1)) cap H cap D|, even m

}  // namespace bch
