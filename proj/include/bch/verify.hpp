#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bch/dimension.hpp"

namespace bch {

// Exhaustive closed-form-vs-oracle sweeps.  Each returns one formatted
// counterexample line per mismatch; an empty vector means full agreement.
// Work is sharded per parameter tuple across `workers` threads and merged in
// tuple order, so output is deterministic.

struct Grid {
    Int q_max = 9;
    Int m_min = 4;
    Int m_max = 8;
    Int modulus_limit = Int(1) << 20;  // keep q^m - 1 at or below this
};

// q in {2,3,4,5,7,8,9} up to q_max.
std::vector<Int> grid_prime_powers(Int q_max);
std::vector<Int> divisors(Int x);

// dimension() and bose_distance() against the coset oracles, every delta in
// the proven ranges.
std::vector<std::string> verify_dimension_bose(const Grid& grid, int workers);

// dimension_even_small / dimension_odd_small / dimension_special_ab /
// bose_special_ab against the general theorem operations on full domains.
std::vector<std::string> verify_fast_paths(const Grid& grid, int workers);

// Band decomposition of S (odd m) and S-union-H (even m), including
// disjointness, plus the H-palindrome equivalence, on the fixed small grids.
std::vector<std::string> verify_structure(int workers);

// The eight floor-sum identities against literal summation.  `full` uses the
// complete grid (q up to 9, k up to 3, x and y up to 50).
std::vector<std::string> verify_lemmas(bool full, int workers);

// The five assertion counts against brute set enumeration.
std::vector<std::string> verify_assertions(const Grid& grid, int workers);

// Non-narrow-sense theorem: for each eligible b every delta up to delta_max
// must split into fresh size-m cosets, and the defining set must grow at
// delta_max + 1.
std::vector<std::string> verify_nonnarrow(const Grid& grid, int workers);

// Worker count: explicit request > 0 wins, then BCH_PARALLEL, then hardware.
int resolve_workers(int requested = 0);

using SweepTask = std::function<std::vector<std::string>()>;
std::vector<std::string> run_tasks(std::vector<SweepTask> tasks, int workers);

}  // namespace bch
