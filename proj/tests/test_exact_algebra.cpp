#include "curvedt/ring.hpp"
#include "curvedt/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvedt;

namespace {

LaurentPoly L(int k = 1) { return LaurentPoly::monomial(lefschetz_monomial(k)); }
LaurentPoly u() { return LaurentPoly::u(); }
LaurentPoly v() { return LaurentPoly::v(); }
RingElem inv(int k) { return RingElem::inverse_one_minus_lefschetz(k); }

} // namespace

TEST(Rational, CanonicalFormAndFloor) {
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
    EXPECT_EQ(floor(make_rational(-1, 3)), -1);
    EXPECT_EQ(fractional_part(make_rational(-1, 3)), make_rational(2, 3));
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(LaurentPoly, HalfLefschetzSigns) {
    EXPECT_EQ(half_lefschetz(2), u() * v());
    EXPECT_EQ(half_lefschetz(1), LaurentPoly::monomial({1, 1}, -1));
    EXPECT_EQ(half_lefschetz(-1), LaurentPoly::monomial({-1, -1}, -1));
    EXPECT_EQ(half_lefschetz(1) * half_lefschetz(-1), LaurentPoly(1));
    EXPECT_EQ(half_lefschetz(1) * half_lefschetz(1), L());
}

TEST(LaurentPoly, Adams) {
    EXPECT_EQ(adams(2, half_lefschetz(1)), -L());
    EXPECT_EQ(adams(3, half_lefschetz(1)), half_lefschetz(3));
    EXPECT_EQ(adams(1, u() + v()), u() + v());
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        const LaurentPoly a = detail::random_poly(rng), b = detail::random_poly(rng);
        EXPECT_EQ(adams(2, adams(3, a)), adams(6, a));
        EXPECT_EQ(adams(3, a * b), adams(3, a) * adams(3, b));
        EXPECT_EQ(adams(2, a + b), adams(2, a) + adams(2, b));
    }
}

TEST(LaurentPoly, Dualize) {
    EXPECT_EQ(dualize(u() * v()), LaurentPoly::monomial({-2, -2}));
    const LaurentPoly sym = half_lefschetz(1) + half_lefschetz(-1);
    EXPECT_EQ(dualize(sym), sym);
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        const LaurentPoly a = detail::random_poly(rng);
        EXPECT_EQ(dualize(dualize(a)), a);
    }
}

TEST(LaurentPoly, ExactDivision) {
    EXPECT_EQ(exact_divide_cyclo(LaurentPoly(1) - L(2), 1), LaurentPoly(1) + L());
    EXPECT_THROW(exact_divide_cyclo(LaurentPoly(1) - L(), 2), NotDivisibleError);
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        const LaurentPoly q = detail::random_poly(rng, 5, 4);
        EXPECT_EQ(exact_divide_cyclo(q.times_one_minus_lefschetz(3), 3), q);
    }
}

TEST(LaurentPoly, RingAxioms) {
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        const LaurentPoly a = detail::random_poly(rng), b = detail::random_poly(rng), c = detail::random_poly(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, LaurentPoly());
    }
}

TEST(LaurentPoly, SpecializeY) {
    EXPECT_EQ(specialize_y(u() * v()), UniPoly::y_power(2));
    EXPECT_EQ(specialize_y(half_lefschetz(1)), UniPoly::y_power(1, -1));
    EXPECT_EQ(specialize_y(u() + v()), UniPoly::y_power(1, 2));
    std::mt19937 rng(19);
    for (int i = 0; i < 10; ++i) {
        const LaurentPoly a = detail::random_poly(rng), b = detail::random_poly(rng);
        EXPECT_EQ(specialize_y(a * b), specialize_y(a) * specialize_y(b));
    }
}

TEST(RingElem, Addition) {
    EXPECT_EQ(inv(1) + inv(1), Rational(2) * inv(1));
    const RingElem x(u() + v(), CycloDenominator::factor(2));
    EXPECT_EQ(x + RingElem(), x);
    const RingElem hand((LaurentPoly(1) - L(2)) + (LaurentPoly(1) - L()),
                        CycloDenominator::factor(1) * CycloDenominator::factor(2));
    EXPECT_EQ(inv(1) + inv(2), hand);
}

TEST(RingElem, MultiplicationAndEquality) {
    const RingElem half(half_lefschetz(1));
    EXPECT_EQ(half * half, RingElem(u() * v()));
    EXPECT_EQ(RingElem(LaurentPoly(1) - L()) * inv(1), RingElem(1));
    const RingElem x(u() - v(), CycloDenominator::factor(3));
    EXPECT_EQ(x * RingElem(1), x);
}

TEST(RingElem, AdamsOnDenominators) {
    EXPECT_EQ(adams(2, inv(1)), inv(2));
    std::mt19937 rng(23);
    for (int i = 0; i < 10; ++i) {
        const RingElem a = detail::random_elem(rng), b = detail::random_elem(rng);
        EXPECT_EQ(adams(2, a * b), adams(2, a) * adams(2, b));
        EXPECT_EQ(adams(3, a + b), adams(3, a) + adams(3, b));
        EXPECT_EQ(adams(2, adams(3, a)), adams(6, a));
    }
}

TEST(RingElem, ToPolynomial) {
    EXPECT_EQ(to_polynomial(RingElem(LaurentPoly(1) - L(2), CycloDenominator::factor(1))), LaurentPoly(1) + L());
    EXPECT_THROW(to_polynomial(inv(1)), NotDivisibleError);
}

TEST(RingElem, SpecializeY) {
    const UniFrac s = specialize_y(inv(2));
    EXPECT_EQ(s, UniFrac(UniPoly(1), UniPoly::one_minus_y(4)));
}
