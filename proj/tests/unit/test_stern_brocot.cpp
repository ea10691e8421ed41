#include <doctest.h>

#include <random>

#include "fairalloc/stern_brocot.hpp"

using namespace fairalloc;

TEST_CASE("simplest rational: known intervals") {
    CHECK(simplest_in_open_interval(rat(3, 8), rat(3, 4)) == rat(1, 2));
    CHECK(simplest_in_open_interval(rat(0), rat(1)) == rat(1, 2));
    CHECK(simplest_in_open_interval(rat(1, 3), rat(2, 3)) == rat(1, 2));
    CHECK(simplest_in_open_interval(rat(2, 5), rat(3, 7)) == rat(5, 12));
    CHECK(simplest_in_open_interval(rat(1), rat(3)) == rat(2));
    CHECK_THROWS_AS(simplest_in_open_interval(rat(1, 2), rat(1, 2)),
                    FairallocError);
}

TEST_CASE("simplest rational: minimal denominator by brute force") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        long d1 = 2 + static_cast<long>(rng() % 200);
        long d2 = 2 + static_cast<long>(rng() % 200);
        Rat lo = rat(static_cast<long>(rng() % d1), d1);
        Rat hi = lo + rat(1 + static_cast<long>(rng() % 50), d2);
        Rat got = simplest_in_open_interval(lo, hi);
        CHECK(got > lo);
        CHECK(got < hi);
        long qmin = -1;
        for (long q = 1; q <= got.get_den().get_si(); ++q) {
            // Any p/q strictly inside?
            Int p0 = rat_floor(lo * q) + 1;
            if (rat(p0, Int(q)) < hi && rat(p0, Int(q)) > lo) {
                qmin = q;
                break;
            }
        }
        CHECK(qmin == got.get_den().get_si());
    }
}

TEST_CASE("simplest rational: thin intervals stay fast and exact") {
    // (a, a + 1e-12)-style intervals exercise the continued-fraction jumps.
    Rat a = rat(355, 113);
    Rat eps = rat(1, 1000000007);
    Rat got = simplest_in_open_interval(a, a + eps);
    CHECK(got > a);
    CHECK(got < a + eps);
}
