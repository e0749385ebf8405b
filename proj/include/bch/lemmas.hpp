#pragma once

#include "bch/int128.hpp"

namespace bch {

// Closed forms for the eight auxiliary floor-sum identities, each paired with
// a literal brute-force evaluation of the defining expression.  The closed
// forms enforce the identities' stated preconditions; the brutes accept any
// input on which the defining sum makes sense, so tests can probe beyond.
// Throughout, lambda must divide q-1 where a lambda appears.

// |{alpha in [1,x] : q does not divide alpha, lambda | alpha+y}|
//   = floor((x+y)/lambda) - floor((floor(x/q)+y)/lambda)
Int count_shifted_multiples(Int x, Int y, Int lambda, Int q);
Int count_shifted_multiples_brute(Int x, Int y, Int lambda, Int q);

// |{alpha in [x,y] : lambda | 2*alpha, q does not divide alpha}|, with an
// odd/even lambda branch.
Int count_double_multiples(Int x, Int y, Int lambda, Int q);
Int count_double_multiples_brute(Int x, Int y, Int lambda, Int q);

// sum_{t=1}^{q-1} [floor((t+x)/lambda) - floor((t+y)/lambda)] = (q-1)(x-y)/lambda
Int sum_floor_diff(Int x, Int y, Int lambda, Int q);
Int sum_floor_diff_brute(Int x, Int y, Int lambda, Int q);

// sum_{t=q, q not| t}^{a*q} [floor((floor(t/q)+t)/lambda) - floor(t/lambda)]
//   = a(a-1)(q-1)/(2 lambda)
Int sum_carry_triangle(Int a, Int lambda, Int q);
Int sum_carry_triangle_brute(Int a, Int lambda, Int q);

// sum_{t=1}^{q-1} [floor((2t+x)/lambda) - floor((t+x)/lambda)] for even x;
// the value does not depend on x.
Int sum_double_vs_single(Int x_even, Int lambda, Int q);
Int sum_double_vs_single_brute(Int x, Int lambda, Int q);

// sum_{t=q^k, q not| t}^{a q^k - 1} [floor(2t/lambda) - floor((floor(t/q)+t)/lambda)]
Int sum_band_2t(Int k, Int a, Int lambda, Int q);
Int sum_band_2t_brute(Int k, Int a, Int lambda, Int q);

// sum_{t=q^k}^{a q^k - 1} N(t+1)
Int sum_N_band(Int k, Int a, Int q);
Int sum_N_band_brute(Int k, Int a, Int q);

// The two-exponent band sums over t in [q^(k-i), a q^(k-i) - 1], q not| t.
// ODD_STEP uses exponents (2i-1, 2i-2), EVEN_STEP uses (2i, 2i-1); each has a
// boundary case at the extreme i and an interior case.  EVEN_STEP excludes
// i = 0 (that sum is sum_band_2t's identity).
enum class StepKind { ODD_STEP, EVEN_STEP };

Int sum_band_shift(Int k, Int a, Int i, Int lambda, Int q, StepKind variant);
Int sum_band_shift_brute(Int k, Int a, Int i, Int lambda, Int q, StepKind variant);

// floor(t * q^e) for possibly negative e, as exact integer arithmetic.
Int floor_mul_pow(Int t, Int q, Int e);

}  // namespace bch
