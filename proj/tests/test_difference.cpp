#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace troplin;

using oracle::random_difference_system;

TEST(Solve, Examples) {
    DifferenceSystem one(2);
    one.add_le(0, 1, -1);
    const auto r1 = solve(one);
    ASSERT_TRUE(r1.feasible());
    EXPECT_TRUE(one.satisfied_by(*r1.witness));

    DifferenceSystem two(2);
    two.add_le(0, 1, -1);
    two.add_le(1, 0, 0);
    const auto r2 = solve(two);
    ASSERT_FALSE(r2.feasible());
    ASSERT_TRUE(r2.certificate.has_value());
    EXPECT_EQ(r2.certificate->weight, Rational(-1));

    DifferenceSystem three(2);
    three.add_le(0, 1, 0);
    three.add_lt(1, 0, 0);
    const auto r3 = solve(three);
    ASSERT_FALSE(r3.feasible());
    EXPECT_EQ(r3.certificate->weight, Rational(0));
    EXPECT_EQ(r3.certificate->strict_edges, 1);
}

TEST(Solve, AgreesWithFourierMotzkin) {
    Rng rng(51);
    int feasible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto sys = random_difference_system(rng);
        const auto result = solve(sys);
        ASSERT_EQ(result.feasible(), oracle::fourier_motzkin_feasible(sys)) << "trial " << trial;
        if (result.feasible()) {
            ++feasible;
            EXPECT_TRUE(sys.satisfied_by(*result.witness));
        } else {
            ASSERT_TRUE(result.certificate.has_value());
            const auto& cert = *result.certificate;
            Rational sum = 0;
            int strict = 0;
            for (const auto& c : cert.cycle) {
                sum += c.bound;
                strict += c.strict;
            }
            EXPECT_EQ(sum, cert.weight);
            EXPECT_EQ(strict, cert.strict_edges);
            EXPECT_TRUE(cert.weight < 0 || (cert.weight == 0 && cert.strict_edges > 0));
            for (std::size_t k = 0; k < cert.cycle.size(); ++k) {
                EXPECT_EQ(cert.cycle[k].lhs, cert.cycle[(k + 1) % cert.cycle.size()].rhs);
            }
        }
    }
    EXPECT_GT(feasible, 100);
    EXPECT_LT(feasible, 450);
}

TEST(Solve, RejectsBadIndices) {
    DifferenceSystem sys(2);
    EXPECT_THROW(sys.add_le(0, 2, 1), InvalidArgument);
    EXPECT_THROW(DifferenceSystem(-1), InvalidArgument);
}

TEST(EqualityComponents, CountsConnectedComponents) {
    DifferenceSystem sys(4);
    EXPECT_EQ(equality_components(sys), 4);
    sys.add_eq(0, 1, 1);
    sys.add_eq(2, 3, 0);
    EXPECT_EQ(equality_components(sys), 2);
    sys.add_eq(1, 2, 0);
    EXPECT_EQ(equality_components(sys), 1);
}

TEST(IsBounded, Examples) {
    DifferenceSystem line(2);
    line.add_eq(0, 1, 1);
    EXPECT_TRUE(is_bounded(line));

    DifferenceSystem square(2);
    square.add_lt(0, 1, 1);
    square.add_lt(1, 0, 1);
    EXPECT_TRUE(is_bounded(square));

    DifferenceSystem ray(2);
    ray.add_lt(0, 1, 1);
    ray.add_lt(0, 1, -1);
    EXPECT_FALSE(is_bounded(ray));
}

TEST(IsBounded, MatchesRecessionConeOracle) {
    Rng rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        const auto sys = random_difference_system(rng);
        if (!solve(sys).feasible()) continue;
        EXPECT_EQ(is_bounded(sys), oracle::bounded_by_rays(sys)) << "trial " << trial;
    }
}
