#pragma once

#include <vector>

#include "bch/cyclotomic.hpp"
#include "bch/dimension.hpp"

namespace bch {

// Ground-truth oracles.  dimension_oracle unions the cosets C_n(b) ...
// C_n(b+delta-2) explicitly (bitset for n up to 2^22, sorted set beyond);
// bose_oracle scans for the next coset leader (narrow sense) or grows the
// union until it changes (general b).
Int dimension_oracle(const BchParams& p, Int delta, Int b = 1);
Int bose_oracle(const BchParams& p, Int delta, Int b = 1);

// Incremental equivalents used by exhaustive sweeps: index [delta] holds the
// value for that designed distance, entries 0 and 1 unused.  Produces the
// same numbers as the point oracles (tested), in one pass over the modulus.
std::vector<Int> dimension_oracle_sweep(const BchParams& p, Int delta_max, Int b = 1);
std::vector<Int> bose_oracle_sweep(const BchParams& p, Int delta_max);

}  // namespace bch
