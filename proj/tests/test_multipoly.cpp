#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lwlab/egf.hpp>
#include <lwlab/multipoly.hpp>
#include <lwlab/symfunc.hpp>

#include <random>

using namespace lwlab;

namespace {

MultiPoly x(const PolyRing& r, int i) { return MultiPoly::variable(r, i); }

MultiPoly random_poly(const PolyRing& r, std::mt19937_64& rng, int terms, int max_deg) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> expo(0, max_deg);
    MultiPoly p(r);
    for (int t = 0; t < terms; ++t) {
        Mono m(r.slots(), 0);
        int budget = max_deg;
        for (int i = 0; i < r.slots(); ++i) {
            int e = expo(rng) % (budget + 1);
            m[i] = e;
            budget -= e;
        }
        p += MultiPoly::monomial(r, m, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    PolyRing r = PolyRing::plain(2);
    MultiPoly a = x(r, 1) + x(r, 2);
    MultiPoly b = x(r, 1) - x(r, 2);
    CHECK(a * b == x(r, 1) * x(r, 1) - x(r, 2) * x(r, 2));
    MultiPoly p = a * a - b;
    CHECK((p + (-p)).is_zero());
    CHECK(p - p == MultiPoly(r));
}

TEST_CASE("laurent half-exponent square") {
    PolyRing r = PolyRing::laurent_half(1);
    MultiPoly s = MultiPoly::half_power(r, 1, 1) + MultiPoly::half_power(r, 1, -1);
    MultiPoly sq = s * s;
    CHECK(sq == MultiPoly::variable(r, 1) + MultiPoly::constant(r, 2) +
                    MultiPoly::half_power(r, 1, -2));
}

TEST_CASE("coefficient extraction") {
    PolyRing r2 = PolyRing::plain(2);
    MultiPoly s2 = schur(r2, Partition{2});
    CHECK(s2.coefficient_x({1, 1}) == 1);
    CHECK((x(r2, 1) * x(r2, 2)).coefficient_x({2, 0}) == 0);
    PolyRing r3 = PolyRing::plain(3);
    CHECK(schur(r3, Partition{2, 1}).coefficient_x({1, 1, 1}) == 2);
}

TEST_CASE("evaluation") {
    PolyRing r = PolyRing::plain(2);
    MultiPoly p = x(r, 1) * x(r, 1) + x(r, 2);
    CHECK(p.evaluate({Rat(2), Rat(3)}) == Rat(7));
    CHECK(MultiPoly(r).evaluate({Rat(1), Rat(1)}) == Rat(0));
    PolyRing rl = PolyRing::laurent_half(1);
    CHECK(MultiPoly::half_power(rl, 1, -2).evaluate({Rat(1, 2)}) == Rat(2));
    CHECK_THROWS(MultiPoly::half_power(rl, 1, -2).evaluate({Rat(0)}));
    CHECK_THROWS(MultiPoly::half_power(rl, 1, 1).evaluate({Rat(2)}));  // no exact sqrt
    CHECK(MultiPoly::half_power(rl, 1, 1).evaluate({Rat(9, 4)}) == Rat(3, 2));
}

TEST_CASE("ring laws on random triples") {
    std::mt19937_64 rng(7);
    PolyRing r = PolyRing::plain(4);
    for (int t = 0; t < 100; ++t) {
        MultiPoly a = random_poly(r, rng, 4, 6);
        MultiPoly b = random_poly(r, rng, 4, 6);
        MultiPoly c = random_poly(r, rng, 4, 6);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    PolyRing r = PolyRing::plain(3);
    std::vector<Rat> pt{Rat(2, 3), Rat(-1, 2), Rat(5)};
    for (int t = 0; t < 20; ++t) {
        MultiPoly a = random_poly(r, rng, 4, 5);
        MultiPoly b = random_poly(r, rng, 4, 5);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("mode mismatch is rejected") {
    PolyRing a = PolyRing::plain(2), b = PolyRing::plain(3);
    CHECK_THROWS(x(a, 1) + x(b, 1));
    CHECK_THROWS(MultiPoly::monomial(a, Mono{-1, 0}, 1));
    CHECK_THROWS(MultiPoly::u(a));
}

TEST_CASE("u substitution and extraction") {
    PolyRing r = PolyRing::with_extra_u(2);
    MultiPoly p = (MultiPoly::u(r) + MultiPoly::constant(r, 1)) * x(r, 1) +
                  MultiPoly::u(r, 2) * x(r, 2);
    PolyRing plain = PolyRing::plain(2);
    CHECK(p.substitute_u_one() == x(plain, 1) * Int(2) + x(plain, 2));
    CHECK(p.coeff_of_u(0) == x(plain, 1));
    CHECK(p.coeff_of_u(1) == x(plain, 1));
    CHECK(p.coeff_of_u(2) == x(plain, 2));
    CHECK(p.coeff_of_u(3).is_zero());
}

TEST_CASE("canonical rendering is stable") {
    PolyRing r = PolyRing::plain(2);
    MultiPoly p = x(r, 2) + x(r, 1) + x(r, 1) * x(r, 1) * Int(3) - MultiPoly::constant(r, 4);
    CHECK(p.to_string() == "3*x1^2 + x1 + x2 - 4");
    CHECK(p.canonical_hash() == (p + MultiPoly(r)).canonical_hash());
}

TEST_CASE("egf series arithmetic") {
    EgfSeries f = EgfSeries::exp_x(6);
    EgfSeries g = EgfSeries::bessel_i(1, 6);
    EgfSeries prod = f * g;
    for (int k = 0; k <= 6; ++k) {
        Rat want = 0;
        for (int i = 0; i <= k; ++i) want += f.coeff(i) * g.coeff(k - i);
        CHECK(prod.coeff(k) == want);
    }
    CHECK(EgfSeries::bessel_i(-2, 8) == EgfSeries::bessel_i(2, 8));
    CHECK(f.derivative().coeff(3) == f.coeff(4) * 4);
}
