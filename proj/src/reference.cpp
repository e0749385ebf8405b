#include "bch/reference.hpp"

#include <set>

namespace bch {

namespace {

constexpr Int kBitsetLimit = Int(1) << 20;

void check_window(const BchParams& p, Int delta, Int b) {
    if (delta < 2) fail(errc::bad_range, "oracle requires delta >= 2");
    if (b < 0) fail(errc::bad_range, "oracle requires b >= 0");
    if (b + delta - 2 > p.n - 1) fail(errc::bad_range, "oracle requires b + delta - 2 <= n - 1");
}

// Inserts the orbit of a; returns how many elements were new.
Int add_orbit_bitset(std::vector<bool>& in_union, Int a, Int n, Int q) {
    Int added = 0;
    Int x = a;
    do {
        if (!in_union[static_cast<std::size_t>(x)]) {
            in_union[static_cast<std::size_t>(x)] = true;
            ++added;
        }
        x = x * q % n;
    } while (x != a);
    return added;
}

Int add_orbit_set(std::set<Int>& in_union, Int a, Int n, Int q) {
    Int added = 0;
    Int x = a;
    do {
        if (in_union.insert(x).second) ++added;
        x = checked_mul(x, q) % n;
    } while (x != a);
    return added;
}

}  // namespace

Int dimension_oracle(const BchParams& p, Int delta, Int b) {
    check_window(p, delta, b);
    Int covered = 0;
    if (p.n <= kBitsetLimit) {
        std::vector<bool> in_union(static_cast<std::size_t>(p.n), false);
        for (Int a = b; a <= b + delta - 2; ++a) covered += add_orbit_bitset(in_union, a, p.n, p.q);
    } else {
        std::set<Int> in_union;
        for (Int a = b; a <= b + delta - 2; ++a) covered += add_orbit_set(in_union, a, p.n, p.q);
    }
    return p.n - covered;
}

Int bose_oracle(const BchParams& p, Int delta, Int b) {
    check_window(p, delta, b);
    if (b == 1) {
        // smallest coset leader >= delta
        for (Int a = delta; a <= p.n - 1; ++a)
            if (is_coset_leader(a, p.n, p.q)) return a;
        fail(errc::bad_range, "no coset leader at or above delta");
    }
    // largest delta' >= delta whose defining set equals the one for delta
    std::vector<bool> in_union(static_cast<std::size_t>(p.n), false);
    for (Int a = b; a <= b + delta - 2; ++a) add_orbit_bitset(in_union, a, p.n, p.q);
    Int dprime = delta;
    while (b + dprime - 1 <= p.n - 1 &&
           add_orbit_bitset(in_union, b + dprime - 1, p.n, p.q) == 0)
        ++dprime;
    return dprime;
}

std::vector<Int> dimension_oracle_sweep(const BchParams& p, Int delta_max, Int b) {
    check_window(p, delta_max, b);
    std::vector<Int> dims(static_cast<std::size_t>(delta_max) + 1, 0);
    std::vector<bool> in_union(static_cast<std::size_t>(p.n), false);
    Int covered = 0;
    for (Int delta = 2; delta <= delta_max; ++delta) {
        covered += add_orbit_bitset(in_union, b + delta - 2, p.n, p.q);
        dims[static_cast<std::size_t>(delta)] = p.n - covered;
    }
    return dims;
}

std::vector<Int> bose_oracle_sweep(const BchParams& p, Int delta_max) {
    if (delta_max < 2 || delta_max > p.n - 1) fail(errc::bad_range, "delta_max outside [2, n-1]");
    CosetTable table = build_coset_table(p.n, p.q);
    std::vector<Int> bose(static_cast<std::size_t>(delta_max) + 1, 0);
    for (Int delta = 2; delta <= delta_max; ++delta) {
        auto leader = table.next_leader(delta);
        if (!leader) fail(errc::bad_range, "no coset leader at or above delta");
        bose[static_cast<std::size_t>(delta)] = *leader;
    }
    return bose;
}

}  // namespace bch
