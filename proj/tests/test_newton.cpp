#include <doctest.h>

#include <numeric>
#include "golod/errors.hpp"
#include "golod/golod_checks.hpp"
#include "golod/newton.hpp"
#include "test_support.hpp"

using namespace golod;
using testsup::ideal;
using testsup::mono;
using testsup::ring;

TEST_CASE("np_member worked points") {
    auto ctx = ring("x,y,z");
    auto I = ideal(ctx, "x*y, z^2");
    // Generators are inside their own Newton region.
    for (const auto& g : I.gens()) CHECK(np_member(I, RationalPoint::scaled(g, Rat(1))));
    // (2/3)*(1,1,1) is in NP(I): x*y*z at p=3, q=2.
    CHECK(np_member(I, RationalPoint::scaled(mono(ctx, "x*y*z"), Rat(2, 3))));
    // (2/3)*(0,2,2) is not: y^2*z^2 stays outside I^{3/2}.
    CHECK_FALSE(np_member(I, RationalPoint::scaled(mono(ctx, "y^2*z^2"), Rat(2, 3))));
    CHECK_THROWS_AS(RationalPoint({Rat(-1), Rat(0), Rat(0)}), Error);
}

TEST_CASE("np_member is upward closed") {
    testsup::RandomIdeals gen(61);
    for (int trial = 0; trial < 25; ++trial) {
        auto I = gen.next(3, 4, 3);
        if (!I.is_proper()) continue;
        int n = I.ctx().var_count();
        for (const auto& m : testsup::box_monomials(I.ctx(), 4)) {
            auto a = RationalPoint::scaled(m, Rat(1, 2));
            if (!np_member(I, a)) continue;
            for (int v = 0; v < n; ++v) {
                auto up = a.coords();
                up[static_cast<size_t>(v)] += Rat(1, 3);
                CHECK(np_member(I, RationalPoint(up)));
            }
        }
    }
}

TEST_CASE("integral closure against the power oracle") {
    auto ctx = ring("x,y");
    auto I = ideal(ctx, "x^2, y^2");
    // Oracle: minimal generators of the set of box points a with
    // (x^a)^r in I^r for some r (pure brute force, no LP).
    auto expected = testsup::minimal_generators_by(ctx, 4, [&](const Monomial& m) {
        return power_oracle_member(I, m, 1, 1) == OracleVerdict::member;
    });
    auto C = integral_closure(I);
    CHECK(C == MonomialIdeal(ctx, expected));
    CHECK(C == ideal(ctx, "x^2, x*y, y^2"));  // frozen

    // A principal ideal is integrally closed.
    auto P = ideal(ctx, "x^2*y");
    CHECK(integral_closure(P) == P);
}

TEST_CASE("integral closure contains and is idempotent") {
    testsup::RandomIdeals gen(67);
    for (int trial = 0; trial < 20; ++trial) {
        auto I = gen.next(3, 4, 3);
        if (!I.is_proper()) continue;
        auto C = integral_closure(I);
        CHECK(C.contains(I));
        CHECK(integral_closure(C) == C);
    }
}

TEST_CASE("rational powers of (xy, z^q)") {
    auto ctx = ring("x,y,z");
    CHECK(rational_power(ideal(ctx, "x*y, z^2"), 3, 2) == ideal(ctx, "x^2*y^2, x*y*z, z^3"));
    CHECK(rational_power(ideal(ctx, "x*y, z^3"), 3, 2) == ideal(ctx, "x^2*y^2, x*y*z^2, z^5"));
    CHECK_THROWS_AS(rational_power(ideal(ctx, "x*y"), 0, 2), Error);
}

TEST_CASE("rational power only depends on p/q") {
    testsup::RandomIdeals gen(71);
    for (int trial = 0; trial < 12; ++trial) {
        auto I = gen.next(3, 3, 2);
        if (!I.is_proper()) continue;
        for (auto [p, q] : {std::pair{1, 1}, std::pair{3, 2}, std::pair{2, 1}}) {
            CHECK(rational_power(I, p, q) == rational_power(I, 2 * p, 2 * q));
        }
    }
    auto ctx = ring("x,y");
    auto I = ideal(ctx, "x^2, x*y^3");
    CHECK(rational_power(I, 2, 2) == rational_power(I, 1, 1));
}

TEST_CASE("power oracle worked points") {
    auto ctx = ring("x,y,z");
    auto I = ideal(ctx, "x*y, z^2");
    CHECK(power_oracle_member(I, mono(ctx, "x*y*z"), 3, 2) == OracleVerdict::member);
    CHECK(power_oracle_member(I, mono(ctx, "y^2*z^2"), 3, 2) ==
          OracleVerdict::non_member_up_to_bound);
    CHECK(power_oracle_member(I, mono(ctx, "z^2"), 1, 1) == OracleVerdict::member);
}

TEST_CASE("oracle agreement with np_member over the search box") {
    testsup::RandomIdeals gen(73);
    int points_checked = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto I = gen.next(3, 4, 3);
        if (!I.is_proper()) continue;
        int p = gen.pick(1, 3), q = gen.pick(1, 3);
        int n = I.ctx().var_count();
        Multidegree box(static_cast<size_t>(n), 0);
        for (const auto& g : I.gens())
            for (int v = 0; v < n; ++v)
                box[static_cast<size_t>(v)] = std::max(box[static_cast<size_t>(v)], g[v]);
        for (auto& e : box) e = (e * p + q - 1) / q;
        long l = 1;  // r_max = n * lcm(1..p)
        for (int k = 2; k <= p; ++k) l = std::lcm(l, static_cast<long>(k));
        int r_max = n * static_cast<int>(l);
        for (const auto& m : testsup::box_monomials(I.ctx(), total_degree(box))) {
            if (!dominates(box, m.exponents())) continue;
            bool lp = np_member(I, RationalPoint::scaled(m, Rat(q) / Rat(p)));
            bool oracle = power_oracle_member(I, m, p, q, r_max) == OracleVerdict::member;
            CHECK(lp == oracle);
            ++points_checked;
        }
    }
    CHECK(points_checked > 100);
}

TEST_CASE("theorem suites: strongly Golod survives rational powers") {
    testsup::RandomIdeals gen(79);
    for (int trial = 0; trial < 10; ++trial) {
        // Strongly Golod inputs via the closure of a low-exponent ideal.
        auto seed_ideal = gen.next(3, 3, 1, 1);
        auto I = strongly_golod_closure(seed_ideal);
        if (!I.is_proper()) continue;
        REQUIRE(is_strongly_golod(I).verdict);
        int q = gen.pick(1, 3), p = q + gen.pick(0, 2);
        CHECK(is_strongly_golod(rational_power(I, p, q)).verdict);
        CHECK(is_strongly_golod(integral_closure(I)).verdict);
    }
}

TEST_CASE("p >= 2q makes any rational power strongly Golod") {
    testsup::RandomIdeals gen(83);
    for (int trial = 0; trial < 10; ++trial) {
        auto I = gen.next(3, 4, 2);
        if (!I.is_proper()) continue;
        int q = gen.pick(1, 2);
        int p = 2 * q + gen.pick(0, 1);
        CHECK(is_strongly_golod(rational_power(I, p, q)).verdict);
    }
}

TEST_CASE("box cap guard") {
    auto ctx = ring("x,y,z");
    auto I = ideal(ctx, "x^3*y^3, z^3");
    CHECK_THROWS_AS(rational_power(I, 3, 1, 10), Error);
}
