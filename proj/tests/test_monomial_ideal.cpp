#include <doctest.h>

#include "golod/errors.hpp"
#include "golod/ideal.hpp"
#include "test_support.hpp"

using namespace golod;
using testsup::ideal;
using testsup::mono;
using testsup::ring;

namespace {

// The sixteen generators of m*J in k[x,y,z,w], J = (x^2,y^2,z^2,w^2).
const char* kMJGens =
    "x^3, x^2*y, x^2*z, x^2*w, x*y^2, y^3, y^2*z, y^2*w, x*z^2, y*z^2, z^3, z^2*w, "
    "x*w^2, y*w^2, z*w^2, w^3";

}  // namespace

TEST_CASE("minimize_generators removes divisible generators") {
    auto ctx = ring("x");
    auto I = ideal(ctx, "x^2, x^3");
    CHECK(I.gens() == std::vector<Monomial>{mono(ctx, "x^2")});

    auto ctx2 = ring("x,y");
    auto J = ideal(ctx2, "x, y");
    CHECK(J.gen_count() == 2);
}

TEST_CASE("minimize_generators leaves the m*J generators untouched") {
    auto ctx = ring("x,y,z,w");
    auto I = ideal(ctx, kMJGens);
    CHECK(I.gen_count() == 16);
    // And it is the product (x,y,z,w)*(x^2,y^2,z^2,w^2).
    auto P = product(ideal(ctx, "x, y, z, w"), ideal(ctx, "x^2, y^2, z^2, w^2"));
    CHECK(P == I);
}

TEST_CASE("minimize is idempotent and insensitive to input order") {
    testsup::RandomIdeals gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto I = gen.next();
        auto again = minimize_generators(I.ctx(), I.gens());
        CHECK(again == I);
        auto shuffled = I.gens();
        std::reverse(shuffled.begin(), shuffled.end());
        CHECK(minimize_generators(I.ctx(), shuffled) == I);
        // canonical descending-lex order
        for (size_t k = 1; k < I.gens().size(); ++k)
            CHECK(Monomial::lex_less(I.gens()[k], I.gens()[k - 1]));
    }
}

TEST_CASE("product basics and the 8-variable product") {
    auto ctx = ring("x,y");
    CHECK(product(ideal(ctx, "x"), ideal(ctx, "y")) == ideal(ctx, "x*y"));

    auto ctx8 = ring("a,b,c,d,x,y,z,w");
    auto I1 = ideal(ctx8, "a*x, b*y, c*z, d*w");
    auto I2 = ideal(ctx8, "a, b, c, d");
    auto I = product(I1, I2);
    auto expected = ideal(ctx8,
                          "a^2*x, a*b*x, a*c*x, a*d*x, a*b*y, b^2*y, b*c*y, b*d*y, "
                          "a*c*z, b*c*z, c^2*z, c*d*z, a*d*w, b*d*w, c*d*w, d^2*w");
    CHECK(I == expected);
    CHECK(I.gen_count() == 16);
}

TEST_CASE("colon matches the brute-force membership oracle") {
    auto ctx = ring("x,y");
    auto I = ideal(ctx, "x^2, x*y");
    auto J = ideal(ctx, "x");
    // Oracle: m in I:J iff m*g in I for every generator g of J.
    auto expected = testsup::minimal_generators_by(ctx, 3, [&](const Monomial& m) {
        for (const auto& g : J.gens())
            if (!I.contains(m.times(g))) return false;
        return true;
    });
    auto C = colon(I, J);
    CHECK(C == MonomialIdeal(ctx, expected));
    CHECK(C == ideal(ctx, "x, y"));  // frozen
}

TEST_CASE("colon unit and self cases") {
    auto ctx = ring("x,y");
    auto I = ideal(ctx, "x^2, x*y");
    CHECK(colon(I, MonomialIdeal::unit(ctx)) == I);
    CHECK(colon(I, I) == MonomialIdeal::unit(ctx));
    CHECK_THROWS_WITH_AS(colon(I, MonomialIdeal::zero(ctx)), doctest::Contains("zero"), Error);
}

TEST_CASE("intersection examples") {
    auto ctx = ring("x,y");
    CHECK(intersection(ideal(ctx, "x"), ideal(ctx, "y")) == ideal(ctx, "x*y"));

    auto I = ideal(ctx, "x^2, y");
    auto J = ideal(ctx, "x");
    auto expected = testsup::minimal_generators_by(
        ctx, 3, [&](const Monomial& m) { return I.contains(m) && J.contains(m); });
    auto C = intersection(I, J);
    CHECK(C == MonomialIdeal(ctx, expected));
    CHECK(C == ideal(ctx, "x^2, x*y"));  // frozen
}

TEST_CASE("sum and power") {
    auto ctx = ring("x,y,z");
    auto I = ideal(ctx, "x*y, z^2");
    CHECK(power(I, 0) == MonomialIdeal::unit(ctx));
    CHECK(power(I, 1) == I);
    CHECK(power(I, 3) == ideal(ctx, "x^3*y^3, x^2*y^2*z^2, x*y*z^4, z^6"));
    CHECK(sum(ideal(ctx, "x"), ideal(ctx, "y")) == ideal(ctx, "x, y"));
}

TEST_CASE("membership") {
    auto ctx = ring("x,y,z,w");
    auto I = ideal(ctx, kMJGens);
    CHECK_FALSE(I.contains(mono(ctx, "x*y*z*w")));
    CHECK(I.contains(mono(ctx, "x^2*y^2")));
    CHECK(MonomialIdeal::unit(ctx).contains(Monomial::unit(4)));
    CHECK_FALSE(MonomialIdeal::zero(ctx).contains(mono(ctx, "x")));
}

TEST_CASE("derivative ideal") {
    auto ctx = ring("x,y");
    CHECK(derivative_ideal(ideal(ctx, "x^2*y")) == ideal(ctx, "x*y, x^2"));
    CHECK(derivative_ideal(ideal(ctx, "x, y")) == MonomialIdeal::unit(ctx));
    auto ctx3 = ring("x,y,z");
    CHECK(derivative_ideal(ideal(ctx3, "x*y, x*z")) == ideal(ctx3, "x, y, z"));
    CHECK(derivative_ideal(MonomialIdeal::zero(ctx)) == MonomialIdeal::zero(ctx));
}

TEST_CASE("divisible part") {
    auto ctx = ring("x,y,z");
    auto I = ideal(ctx, "x^2*y^2, x^2*z, y^2*z, x*y*z");
    // m = x*y*z picks out the squarefree part.
    CHECK(divisible_part(I, mono(ctx, "x*y*z")) == ideal(ctx, "x*y*z"));
    CHECK(divisible_part(I, I.lcm_of_gens()) == I);
    CHECK(divisible_part(I, Monomial::unit(3)) == MonomialIdeal::zero(ctx));
}

TEST_CASE("containment chain invariants on random ideals") {
    testsup::RandomIdeals gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto I = gen.next(3, 4, 3);
        auto J = testsup::ideal(I.ctx(), I.gens()[0].str(I.ctx()));  // principal slice
        auto P = product(I, J);
        auto M = intersection(I, J);
        auto C = colon(I, J);
        CHECK(M.contains(P));        // IJ inside I cap J
        CHECK(I.contains(M));        // I cap J inside I
        CHECK(C.contains(I));        // I inside I:J
        CHECK(I.contains(product(C, J)));  // (I:J) J inside I
    }
}

TEST_CASE("context and dimension errors") {
    auto ctx = ring("x,y");
    auto other = ring("x,z");
    CHECK_THROWS_AS(product(ideal(ctx, "x"), ideal(other, "x")), Error);
    CHECK_THROWS_AS(MonomialIdeal(ctx, {Monomial::unit(3)}), Error);
}
