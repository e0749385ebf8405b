#pragma once

#include "bch/intmath.hpp"

namespace bch {

// An element of a digit-pattern band set, together with its unique split
// a = t * q^(h+i) + alpha.  q never divides t, and lambda | a holds exactly
// when lambda | t + alpha.
struct BandElement {
    Int a = 0;
    Int k = 0;
    Int i = 0;
    Int t = 0;
    Int alpha = 0;
};

// Largest band index covered by the band decomposition: floor((2m-1)/3) - h.
Int band_k_max(Int m);

// S: integers in [1, q^m-2] coprime to q that fail to be coset leaders
// modulo q^m - 1.  Decided by a brute orbit walk.
bool in_S_brute(Int a, Int q, Int m);

// H (even m only): coset leaders modulo q^m - 1 whose orbit has size m/2.
bool in_H_brute(Int a, Int q, Int m);

// Structural H test on the band [q^(h+k), q^(h+k+1)): the digit vector is a
// repeated block (0_{h-k-1}, a_k..a_0, 0_{h-k-1}, a_k..a_0) with a_0, a_k > 0.
bool in_H_palindrome(Int a, Int q, Int m, Int k);

// Digit-pattern membership tests for the band sets decomposing S (odd m)
// and S-union-H (even m).  For an i that is not the least index with
// a_{h+i} > 0 these return false, never an error.
bool in_A(Int a, Int q, Int m, Int k, Int i);
bool in_B(Int a, Int q, Int m, Int k, Int i);

// As in_A / in_B but with the suffix-vs-prefix comparison replaced by the
// equivalent arithmetic bound 1 <= alpha <= floor(t * q^(2i-1)) (odd m)
// resp. floor(t * q^(2i)) (even m).  Used to cross-check the two routes.
bool in_A_arith(Int a, Int q, Int m, Int k, Int i);
bool in_B_arith(Int a, Int q, Int m, Int k, Int i);

// Unique (t, alpha) split of a band member; requires in_A / in_B to hold.
BandElement decompose(Int a, Int q, Int m, Int k, Int i);

// lambda | a  iff  lambda | t + alpha (valid whenever lambda divides q-1).
bool lambda_divides_via_parts(const BandElement& e, Int lambda);

}  // namespace bch
