#include "curvedt/pipeline.hpp"
#include "curvedt/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvedt;

namespace {

GradedSeries geometric(int rmax) {
    GradedSeries s(rmax);
    for (int n = 0; n <= rmax; ++n)
        s[n] = RingElem(1);
    return s;
}

GradedSeries random_series(std::mt19937& rng, int rmax, bool unit) {
    GradedSeries f = unit ? GradedSeries::one(rmax) : GradedSeries(rmax);
    for (int r = 1; r <= rmax; ++r)
        f[r] = detail::random_elem(rng);
    return f;
}

} // namespace

TEST(Mobius, Values) {
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(2), -1);
    EXPECT_EQ(mobius(4), 0);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(30), -1);
}

TEST(GradedSeries, Multiplication) {
    const GradedSeries t = GradedSeries::monomial(4, 1, RingElem(1));
    const GradedSeries one = GradedSeries::one(4);
    EXPECT_EQ((one + t) * (one - t), one - GradedSeries::monomial(4, 2, RingElem(1)));
    EXPECT_EQ(geometric(4) * (one - t), one);
    EXPECT_EQ(t * one, t);
}

TEST(GradedSeries, LogAndExp) {
    const int n = 5;
    EXPECT_EQ(series_log(GradedSeries::one(n)), GradedSeries(n));
    EXPECT_EQ(series_exp(GradedSeries(n)), GradedSeries::one(n));
    GradedSeries harmonic(n), exponential(n);
    Rational fact = 1;
    for (int k = 1; k <= n; ++k)
        harmonic[k] = RingElem(make_rational(1, k));
    exponential[0] = RingElem(1);
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        exponential[k] = RingElem(Rational(1 / fact));
    }
    EXPECT_EQ(series_log(geometric(n)), harmonic);
    EXPECT_EQ(series_exp(GradedSeries::monomial(n, 1, RingElem(1))), exponential);
    EXPECT_THROW(series_log(GradedSeries(n)), std::exception);
    EXPECT_THROW(series_exp(GradedSeries::one(n)), std::exception);
}

TEST(GradedSeries, AdamsSeries) {
    const RingElem a(half_lefschetz(1));
    EXPECT_EQ(adams_series(2, GradedSeries::monomial(4, 1, a)), GradedSeries::monomial(4, 2, adams(2, a)));
    std::mt19937 rng(29);
    for (int i = 0; i < 5; ++i) {
        const GradedSeries f = random_series(rng, 4, true), g = random_series(rng, 4, false);
        EXPECT_EQ(adams_series(1, f), f);
        EXPECT_EQ(adams_series(2, f * g), adams_series(2, f) * adams_series(2, g));
        EXPECT_EQ(adams_series(2, adams_series(3, g)), adams_series(6, g));
    }
}

TEST(Plethystic, Examples) {
    EXPECT_EQ(pleth_exp(GradedSeries::monomial(5, 1, RingElem(1))), geometric(5));
    EXPECT_EQ(pleth_log(geometric(5)), GradedSeries::monomial(5, 1, RingElem(1)));
    EXPECT_THROW(pleth_exp(GradedSeries::one(3)), std::exception);
    EXPECT_THROW(pleth_log(GradedSeries(3)), std::exception);
}

TEST(Plethystic, RoundTripsAndAdditivity) {
    std::mt19937 rng(31);
    for (int i = 0; i < 8; ++i) {
        const int n = 1 + i % 6;
        const GradedSeries f = random_series(rng, n, false), g = random_series(rng, n, false);
        const GradedSeries h = random_series(rng, n, true);
        EXPECT_EQ(pleth_log(pleth_exp(f)), f);
        EXPECT_EQ(pleth_exp(pleth_log(h)), h);
        EXPECT_EQ(pleth_exp(f + g), pleth_exp(f) * pleth_exp(g));
    }
}

TEST(Plethystic, CurveZetaFunction) {
    for (int g = 0; g <= 4; ++g) {
        const GradedSeries z = zeta_series(g, 6);
        EXPECT_EQ(z, pleth_exp(GradedSeries::monomial(6, 1, RingElem(curve_epoly(g)))));
        for (int n = 0; n <= 6; ++n)
            EXPECT_EQ(z[n], RingElem(detail::zeta_coefficient(g, n)));
    }
}

TEST(Plethystic, LogCoefficientFormulas) {
    VerifyScope scope;
    for (const auto& r : check_lambda_ring(scope))
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}
