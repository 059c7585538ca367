#include "curvedt/strata.hpp"

#include <gtest/gtest.h>

using namespace curvedt;

namespace {

StratumType type(std::vector<StratumPart> parts) {
    std::sort(parts.begin(), parts.end());
    return StratumType{std::move(parts)};
}

} // namespace

TEST(Strata, Enumeration) {
    EXPECT_EQ(enumerate_strata({2, 1}), std::vector<StratumType>{type({{{2, 1}, 1}})});
    const auto two = enumerate_strata({2, 0});
    ASSERT_EQ(two.size(), 3u);
    EXPECT_NE(std::find(two.begin(), two.end(), type({{{1, 0}, 2}})), two.end());
    EXPECT_NE(std::find(two.begin(), two.end(), type({{{1, 0}, 1}, {{1, 0}, 1}})), two.end());
    EXPECT_EQ(enumerate_strata({3, 0}).size(), 5u);
    EXPECT_THROW(enumerate_strata({0, 1}), std::invalid_argument);
}

TEST(Strata, FiberQuiver) {
    const FramedQuiver single = build_fiber_quiver(2, type({{{1, 4}, 1}}));
    EXPECT_EQ(single.arrows[0][0], 2);
    EXPECT_EQ(single.framing[0], 3);
    const FramedQuiver q = build_fiber_quiver(2, type({{{1, 3}, 1}, {{1, 3}, 1}}));
    EXPECT_EQ(q.arrows, (std::vector<std::vector<int>>{{2, 1}, {1, 2}}));
    EXPECT_EQ(q.framing, (std::vector<int>{2, 2}));
    const FramedQuiver boundary = build_fiber_quiver(3, type({{{2, 8}, 1}}));
    EXPECT_EQ(boundary.framing[0], (3 - 1) * 2);
}

TEST(Strata, EulerForm) {
    const FramedQuiver q = build_fiber_quiver(2, type({{{1, 3}, 1}, {{1, 3}, 1}}));
    // sum m_i m'_i = 2, sum a_ij m_i m'_j = 6
    EXPECT_EQ(euler_form(q, {1, 1}, {1, 1}), -4);
    EXPECT_EQ(euler_form(q, {0, 0}, {1, 2}), 0);
    EXPECT_EQ(euler_form(q, {1, 0}, {1, 0}), -1);
    EXPECT_THROW(euler_form(q, {1}, {1, 1}), std::invalid_argument);
    // agrees with (1 - g)(sum m_i r_i)(sum m'_j r_j)
    const FramedQuiver q3 = build_fiber_quiver(3, type({{{1, 5}, 1}, {{2, 10}, 1}}));
    EXPECT_EQ(euler_form(q3, {2, 1}, {1, 3}), (1 - 3) * (2 * 1 + 1 * 2) * (1 * 1 + 3 * 2));
    for (int i = 0; i < q3.n; ++i)
        for (int j = 0; j < q3.n; ++j)
            EXPECT_EQ(q3.arrows[i][j], q3.arrows[j][i]);
}

TEST(Strata, Codimension) {
    EXPECT_EQ(codim_stratum(2, type({{{2, 0}, 1}})), 0);
    EXPECT_EQ(codim_stratum(2, type({{{1, 0}, 1}, {{1, 0}, 1}})), 1);
    EXPECT_EQ(codim_stratum(2, type({{{1, 0}, 2}})), 3);
}

TEST(Strata, DZero) {
    EXPECT_EQ(d_zero(2, {2, 5}), 2);
    EXPECT_EQ(d_zero(2, {1, 3}), 1);
    EXPECT_EQ(d_zero(3, {1, 5}), 2);
}

TEST(Strata, SmallnessBound) {
    EXPECT_EQ(smallness_bound(2, type({{{2, 0}, 1}})), Rational(0));
    EXPECT_EQ(smallness_bound(2, type({{{1, 0}, 2}})), make_rational(-3, 2));
    EXPECT_EQ(smallness_bound(2, type({{{1, 0}, 1}, {{1, 0}, 1}})), make_rational(-1, 2));
    EXPECT_EQ(smallness_bound(2, type({{{1, 0}, 2}}), LoopBound::generic), make_rational(-1, 2));
}

TEST(Strata, Certificates) {
    for (auto [g, r, d] : {std::tuple{2, 2, 5}, std::tuple{2, 4, 12}, std::tuple{3, 3, 13}, std::tuple{2, 2, 6}}) {
        const SmallnessReport rep = certify_virtual_smallness(g, {r, d});
        EXPECT_TRUE(rep.verdict) << g << " " << r << " " << d;
        EXPECT_TRUE(rep.in_small_range);
        EXPECT_TRUE(rep.warnings.empty());
    }
    EXPECT_EQ(certify_virtual_smallness(2, {2, 5}).strata.size(), 1u);
    EXPECT_EQ(certify_virtual_smallness(2, {2, 6}).strata.size(), 3u);
    const SmallnessReport low = certify_virtual_smallness(2, {2, 1});
    EXPECT_FALSE(low.in_small_range);
    EXPECT_FALSE(low.warnings.empty());
}

TEST(Strata, ExhaustiveSmallRanks) {
    for (int g : {2, 3})
        for (int r = 1; r <= 6; ++r)
            for (int d = r * (2 * g - 2) + 1; d <= r * (2 * g - 2) + r; ++d)
                for (const auto& s : certify_virtual_smallness(g, {r, d}).strata) {
                    EXPECT_TRUE(s.pass);
                    EXPECT_EQ(s.codim == 0, s.maximal);
                    EXPECT_EQ(s.bound == 0, s.maximal);
                    for (int w : build_fiber_quiver(g, s.type).framing)
                        EXPECT_GT(w, 0);
                }
}
