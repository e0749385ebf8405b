#pragma once

#include <optional>
#include <vector>

#include "bch/int128.hpp"

namespace bch {

// One q-cyclotomic coset modulo n: the orbit of a under x -> x*q mod n.
struct CosetSummary {
    Int leader = 0;
    Int size = 0;
    std::vector<Int> members;  // sorted ascending
};

// Full orbit of a (0 <= a < n) under multiplication by q modulo n.
CosetSummary coset(Int a, Int n, Int q);

// True iff a is the minimum of its own orbit.
bool is_coset_leader(Int a, Int n, Int q);

// All coset leaders in [c, d]; when size_filter is given, only leaders whose
// coset has exactly that size.  A full-range scan [0, n-1] takes a sieve fast
// path; the per-candidate check is the reference behaviour.
std::vector<Int> leaders_in_range(Int c, Int d, Int n, Int q,
                                  std::optional<Int> size_filter = std::nullopt);

// Closed-form coset size modulo q^m - 1 for a < q^(m - floor(m/3)):
// always m for odd m; for even m it is m/2 exactly when a*q^h = a (mod q^m-1).
// lambda must divide q-1 (the modulus itself does not depend on it).
Int coset_size_closed(Int a, Int q, Int m, Int lambda);

// Leader and coset size of every residue modulo n, computed by one sweep.
// leaders are the sorted distinct orbit minima; size_of_leader[i] is the
// orbit size of leaders[i]; leader_index_of[a] points into leaders.
struct CosetTable {
    Int n = 0;
    Int q = 0;
    std::vector<Int> leaders;
    std::vector<Int> size_of_leader;
    std::vector<std::uint32_t> leader_index_of;

    Int leader_of(Int a) const { return leaders[leader_index_of[static_cast<std::size_t>(a)]]; }
    Int size_of(Int a) const { return size_of_leader[leader_index_of[static_cast<std::size_t>(a)]]; }
    // Smallest coset leader >= x, if any.
    std::optional<Int> next_leader(Int x) const;
};

CosetTable build_coset_table(Int n, Int q);

}  // namespace bch
