#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace troplin;

namespace {

LocalContext example_ctx(Subset basis = {1, 4}) { return LocalContext(fixtures::octahedron_split(), basis); }

}  // namespace

TEST(LocalContext, RejectsBadInput) {
    EXPECT_THROW(LocalContext(fixtures::broken_octahedron(), {1, 4}), InvalidArgument);
    PlueckerVector p(3, 2);
    p.set({1, 2}, 0);
    EXPECT_THROW(LocalContext(PlueckerVector::validated(p), {1, 2}), InvalidArgument);
    PlueckerVector q(4, 2);
    q.set({1, 3}, 0);
    q.set({1, 4}, 0);
    q.set({2, 3}, 0);
    q.set({2, 4}, 0);
    EXPECT_THROW(LocalContext(PlueckerVector::validated(q), {1, 2}), InvalidArgument);
}

TEST(InSigma, Examples) {
    EXPECT_TRUE(in_sigma(example_ctx(), {0, 0, 0, 0}));
    EXPECT_FALSE(in_sigma(example_ctx({1, 2}), {0, 0, 0, 0}));
    const auto p = fixtures::snowflake();
    for (Subset b : p.support()) {
        Point v(6);
        for (int e : b.elements()) v[static_cast<std::size_t>(e - 1)] = 100;
        EXPECT_TRUE(in_sigma(LocalContext(p, b), v));
    }
}

TEST(InLocalSpace, Examples) {
    EXPECT_TRUE(in_local_space(example_ctx(), {0, -1, -2, -2}));
    EXPECT_FALSE(in_local_space(example_ctx(), {0, -1, -5, -2}));
    const auto u = fixtures::uniform_zero(5, 3);
    for (Subset b : u.support()) EXPECT_TRUE(in_local_space(LocalContext(u, b), Point(5)));
}

TEST(Chart, Examples) {
    const auto ctx = example_ctx();
    EXPECT_EQ(chart(ctx, {0, 0}), (Point{0, 0, 0, 0}));
    EXPECT_EQ(chart(ctx, {0, -2}), (Point{0, -1, -2, -2}));
    EXPECT_THROW(chart(ctx, {0, 0, 0}), InvalidArgument);
}

TEST(Chart, UniformZeroTakesMinimumOfCoordinates) {
    Rng rng(41);
    const auto u = fixtures::uniform_zero(6, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const Subset b = random_subset(rng, 6, 3);
        const Point x = random_point(rng, 3, 5, 3);
        const Point v = chart(LocalContext(u, b), x);
        const Rational low = *std::min_element(x.begin(), x.end());
        for (int i : (Subset::full(6) - b).elements()) EXPECT_EQ(v[static_cast<std::size_t>(i - 1)], low);
    }
}

TEST(ChartInverse, Examples) {
    const auto ctx = example_ctx();
    EXPECT_EQ(chart_inverse(ctx, {0, -1, -2, -2}), (Point{0, -2}));
    EXPECT_THROW(chart_inverse(ctx, {0, -1, -5, -2}), InvalidArgument);
    const auto u = fixtures::uniform_zero(4, 2);
    EXPECT_EQ(chart_inverse(LocalContext(u, {2, 3}), Point(4)), Point(2));
}

TEST(ChartInverse, RoundTripsRandomPoints) {
    Rng rng(42);
    const auto ctx = example_ctx();
    for (int trial = 0; trial < 100; ++trial) {
        const Point x = random_point(rng, 2, 6, 5);
        EXPECT_EQ(chart_inverse(ctx, chart(ctx, x)), x);
    }
}

TEST(Project, Examples) {
    const auto ctx = example_ctx();
    EXPECT_EQ(project(ctx, {0, -1, -5, -2}), (Point{0, -1, -2, -2}));
    EXPECT_EQ(project(ctx, {0, 0, 0, 0}), (Point{0, 0, 0, 0}));
    EXPECT_EQ(project(ctx, {0, -1, -2, -2}), (Point{0, -1, -2, -2}));
    EXPECT_THROW(project(example_ctx({1, 2}), {0, 0, 0, 0}), InvalidArgument);
}

TEST(Project, IndependentOfTheChosenBasisOfMy) {
    // Every basis B of M_y has y ∈ Σ_B; the projection must not depend on which one is used.
    Rng rng(43);
    for (const auto& named : selftest_fixtures()) {
        const auto& p = named.p;
        for (int trial = 0; trial < 80; ++trial) {
            const Point y = random_point(rng, p.n(), 4, 2);
            const Point expected = project_any(p, y);
            const Matroid my = matroid_at(p, y);
            for (Subset b : my.bases()) {
                EXPECT_EQ(project(LocalContext(p, b), y), expected) << named.name << " y=" << format_point(y) << " B=" << b.str();
            }
        }
    }
}

TEST(Project, SelfTestChecksPassOnReducedCounts) {
    SelfTestOptions opt;
    opt.chart_points = 60;
    opt.projection_points = 30;
    for (const auto& r : {check_chart_round_trip(opt), check_projection(opt)}) {
        EXPECT_TRUE(r.passed()) << r.name << ": " << r.detail;
    }
}
