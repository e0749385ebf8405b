#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bch/reference.hpp"
#include "bch/verify.hpp"

using namespace bch;

TEST_CASE("dimension oracle point values") {
    BchParams p342 = make_params(3, 4, 2);
    CHECK(dimension_oracle(p342, 5) == 28);
    CHECK(dimension_oracle(p342, 2) == p342.n - coset(1, p342.n, p342.q).size);
    BchParams p341 = make_params(3, 4, 1);
    CHECK(dimension_oracle(p341, 2, 11) == 76);
    CHECK_THROWS_AS(dimension_oracle(p341, 1), error);
    CHECK_THROWS_AS(dimension_oracle(p341, 100, 50), error);  // window past n-1
}

TEST_CASE("bose oracle point values") {
    BchParams p342 = make_params(3, 4, 2);
    CHECK(bose_oracle(p342, 6) == 7);
    CHECK(bose_oracle(p342, 2) == 2);
    BchParams p352 = make_params(3, 5, 2);
    CHECK(bose_oracle(p352, 14) == 16);
}

TEST_CASE("successive dimensions drop by a coset size or not at all") {
    BchParams p = make_params(3, 4, 2);
    for (Int delta = 2; delta < 20; ++delta) {
        Int drop = dimension_oracle(p, delta) - dimension_oracle(p, delta + 1);
        if (drop == 0) continue;
        CHECK(drop == coset(delta % p.n, p.n, p.q).size);
        CHECK(is_coset_leader(delta, p.n, p.q));
    }
}

TEST_CASE("bose oracle returns a leader preceded by non-leaders") {
    BchParams p = make_params(4, 4, 3);
    for (Int delta = 2; delta <= 20; ++delta) {
        Int db = bose_oracle(p, delta);
        CHECK(is_coset_leader(db, p.n, p.q));
        for (Int x = delta; x < db; ++x) CHECK_FALSE(is_coset_leader(x, p.n, p.q));
    }
}

TEST_CASE("sweeps agree with the point oracles") {
    for (Int q : {2, 3, 5}) {
        for (Int lambda : divisors(q - 1)) {
            BchParams p = make_params(q, 4, lambda);
            Int top = std::min<Int>(delta_max_bose(p), 40);
            std::vector<Int> dims = dimension_oracle_sweep(p, top);
            std::vector<Int> boses = bose_oracle_sweep(p, top);
            for (Int delta = 2; delta <= top; ++delta) {
                CHECK(dims[static_cast<std::size_t>(delta)] == dimension_oracle(p, delta));
                CHECK(boses[static_cast<std::size_t>(delta)] == bose_oracle(p, delta));
            }
        }
    }
}

TEST_CASE("general-b bose oracle grows the defining set") {
    BchParams p = make_params(3, 4, 1);
    // delta' jumps over the non-leader stretch starting at b
    Int db = bose_oracle(p, 2, 9);
    CHECK(db >= 2);
    // at b=11 the first 6 cosets are disjoint, so every delta is its own bose
    for (Int delta = 2; delta <= 7; ++delta) CHECK(bose_oracle(p, delta, 11) == delta);
}
