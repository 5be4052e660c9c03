#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lwlab/symfunc.hpp>

using namespace lwlab;

namespace {
MultiPoly x(const PolyRing& r, int i) { return MultiPoly::variable(r, i); }
}

TEST_CASE("generator bases") {
    PolyRing r3 = PolyRing::plain(3);
    CHECK(elementary(r3, 2) ==
          x(r3, 1) * x(r3, 2) + x(r3, 1) * x(r3, 3) + x(r3, 2) * x(r3, 3));
    CHECK(elementary(r3, 4).is_zero());
    CHECK(elementary(r3, 0) == MultiPoly::constant(r3, 1));
    CHECK(elementary(r3, -1).is_zero());
    PolyRing r2 = PolyRing::plain(2);
    CHECK(complete(r2, 2) == x(r2, 1) * x(r2, 1) + x(r2, 1) * x(r2, 2) + x(r2, 2) * x(r2, 2));
    CHECK(powersum(r2, 3) == x(r2, 1).pow(3) + x(r2, 2).pow(3));
}

TEST_CASE("schur examples") {
    PolyRing r2 = PolyRing::plain(2);
    CHECK(schur(r2, Partition{1, 1}, SchurMethod::JacobiTrudiE) == elementary(r2, 2));
    CHECK(schur(r2, Partition{2, 1}) ==
          x(r2, 1) * x(r2, 1) * x(r2, 2) + x(r2, 1) * x(r2, 2) * x(r2, 2));
    CHECK(schur(r2, Partition{1, 1, 1}).is_zero());
}

TEST_CASE("schur methods agree") {
    for (int n = 1; n <= 3; ++n) {
        PolyRing r = PolyRing::plain(n);
        for (const Partition& la : partitions_up_to(6)) {
            MultiPoly h = schur(r, la, SchurMethod::JacobiTrudiH);
            CHECK(h == schur(r, la, SchurMethod::JacobiTrudiE));
            CHECK(h == schur(r, la, SchurMethod::SsytSum));
        }
    }
}

TEST_CASE("jacobi-trudi padding does not matter") {
    PolyRing r = PolyRing::plain(3);
    for (const Partition& la : partitions_up_to(5)) {
        MultiPoly s = schur(r, la);
        for (int pad = 1; pad <= 2; ++pad) {
            CHECK(schur_jt_h(r, la, la.length() + pad) == s);
            CHECK(schur_jt_e(r, la, la.width() + pad) == s);
        }
    }
}

TEST_CASE("f series") {
    PolyRing r1 = PolyRing::plain(1);
    CHECK(f_series(r1, 0) == MultiPoly::constant(r1, 1) + x(r1, 1) * x(r1, 1));
    CHECK(f_series(r1, 1) == x(r1, 1));
    CHECK(f_series(PolyRing::plain(2), 3).is_zero());
    for (int n = 1; n <= 3; ++n) {
        PolyRing r = PolyRing::plain(n);
        for (int idx = 0; idx <= 2 * n; ++idx) CHECK(f_series(r, idx) == f_series(r, -idx));
    }
}

TEST_CASE("e sums") {
    PolyRing r1 = PolyRing::plain(1);
    CHECK(e_sum(r1, false) == MultiPoly::constant(r1, 1) + x(r1, 1));
    CHECK(e_sum(r1, true) == MultiPoly::constant(r1, 1) - x(r1, 1));
    PolyRing r2 = PolyRing::plain(2);
    CHECK(e_sum(r2, false) == MultiPoly::constant(r2, 1) + x(r2, 1) + x(r2, 2) +
                                  x(r2, 1) * x(r2, 2));
    for (int n = 1; n <= 4; ++n) {
        PolyRing r = PolyRing::plain(n);
        MultiPoly prod = MultiPoly::constant(r, 1);
        for (int i = 1; i <= n; ++i) prod *= MultiPoly::constant(r, 1) - x(r, i) * x(r, i);
        CHECK(e_sum(r, false) * e_sum(r, true) == prod);
    }
}

TEST_CASE("skew powers of f") {
    CHECK(f_skew_power(0, 5) == FComb::single(5));
    CHECK(f_skew_power(1, 0) == FComb::single(1, 2));
    FComb want = FComb::single(1, 3) + FComb::single(3);
    CHECK(f_skew_power(2, 1) == want);
}

TEST_CASE("materializing skew powers matches repeated shifts") {
    PolyRing r = PolyRing::plain(3);
    for (int i = 0; i <= 3; ++i) {
        FComb shifted = FComb::single(i);
        for (int j = 0; j <= 4; ++j) {
            CHECK(f_skew_power(j, i).materialize(r) == shifted.materialize(r));
            CHECK(f_skew_power(j, i) == shifted);
            shifted = shifted.shift_once();
        }
    }
}
