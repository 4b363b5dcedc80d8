#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace troplin;

namespace {

const TropicalScalar inf = TropicalScalar::infinity();

std::vector<TropicalScalar> sample_scalars(Rng& rng, int count) {
    std::vector<TropicalScalar> out{inf, 0};
    while (static_cast<int>(out.size()) < count) out.emplace_back(random_rational(rng, 4, 5));
    return out;
}

}  // namespace

TEST(Rational, ParsesAndFormatsCanonically) {
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("3/-6"), Rational(-1, 2));
    EXPECT_EQ(format_rational(Rational(-4, 8)), "-1/2");
    EXPECT_EQ(format_rational(Rational(6, 3)), "2");
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
    EXPECT_THROW(parse_rational("abc"), InvalidArgument);
    EXPECT_THROW(parse_rational(""), InvalidArgument);
    EXPECT_EQ(parse_point("0, -1/2,3"), (Point{0, Rational(-1, 2), 3}));
    EXPECT_EQ(format_point(Point{0, Rational(-1, 2)}), "(0, -1/2)");
}

TEST(TropicalScalar, InfinityIsLargestAndPrints) {
    EXPECT_TRUE(inf.is_infinite());
    EXPECT_LT(TropicalScalar(1000000), inf);
    EXPECT_EQ(inf.str(), "inf");
    EXPECT_EQ(TropicalScalar::parse("inf"), inf);
    EXPECT_EQ(TropicalScalar::parse("-7/14"), TropicalScalar(Rational(-1, 2)));
    EXPECT_THROW(static_cast<void>(inf.value()), InvalidArgument);
}

TEST(TropicalScalar, MinExamples) {
    EXPECT_EQ(t_min(inf, 3), TropicalScalar(3));
    EXPECT_EQ(t_min(Rational(1, 2), Rational(1, 3)), TropicalScalar(Rational(1, 3)));
    EXPECT_EQ(t_min(inf, inf), inf);
}

TEST(TropicalScalar, PlusExamples) {
    EXPECT_EQ(t_plus(0, Rational(7, 3)), TropicalScalar(Rational(7, 3)));
    EXPECT_EQ(t_plus(inf, 5), inf);
    EXPECT_EQ(t_plus(Rational(1, 2), Rational(1, 3)), TropicalScalar(Rational(5, 6)));
}

TEST(TropicalScalar, SemiringLaws) {
    Rng rng(11);
    const auto xs = sample_scalars(rng, 9);
    for (const auto& a : xs) {
        EXPECT_EQ(t_min(a, inf), a);
        EXPECT_EQ(t_plus(a, 0), a);
        EXPECT_EQ(t_plus(a, inf), inf);
        EXPECT_EQ(t_min(a, a), a);
        for (const auto& b : xs) {
            EXPECT_EQ(t_min(a, b), t_min(b, a));
            EXPECT_EQ(t_plus(a, b), t_plus(b, a));
            for (const auto& c : xs) {
                EXPECT_EQ(t_min(t_min(a, b), c), t_min(a, t_min(b, c)));
                EXPECT_EQ(t_plus(t_plus(a, b), c), t_plus(a, t_plus(b, c)));
                EXPECT_EQ(t_plus(a, t_min(b, c)), t_min(t_plus(a, b), t_plus(a, c)));
            }
        }
    }
}

TEST(MinAchievedTwice, Examples) {
    EXPECT_TRUE(min_achieved_twice({2, 0, 0}));
    EXPECT_TRUE(min_achieved_twice({inf, inf}));
    EXPECT_FALSE(min_achieved_twice({-1, 0, 0}));
    EXPECT_FALSE(min_achieved_twice({TropicalScalar(3)}));
    EXPECT_THROW(min_achieved_twice(std::span<const TropicalScalar>{}), InvalidArgument);
}

TEST(MinAchievedTwice, MatchesCountingOracle) {
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<TropicalScalar> terms;
        const long len = uniform_int(rng, 1, 5);
        for (long k = 0; k < len; ++k) {
            terms.push_back(uniform_int(rng, 0, 4) == 0 ? inf : TropicalScalar(static_cast<long long>(uniform_int(rng, -2, 2))));
        }
        const auto best = *std::min_element(terms.begin(), terms.end());
        const auto count = std::count(terms.begin(), terms.end(), best);
        EXPECT_EQ(min_achieved_twice(terms), best.is_infinite() || count >= 2);
    }
}

TEST(TropicalVector, SupportAndShift) {
    const TropicalVector x{0, inf, Rational(1, 2), inf};
    EXPECT_EQ(Subset::from_bits(x.support_bits()), (Subset{1, 3}));
    EXPECT_FALSE(x.is_all_infinite());
    EXPECT_TRUE(TropicalVector(3).is_all_infinite());
    EXPECT_EQ(x.shifted(2), (TropicalVector{2, inf, Rational(5, 2), inf}));
    EXPECT_EQ(x.str(), "(0, inf, 1/2, inf)");
}

TEST(IsOrthogonal, Examples) {
    EXPECT_TRUE(is_orthogonal({0, 0, 1, inf}, {0, 0, 0, 0}));
    EXPECT_FALSE(is_orthogonal({0, inf, inf, inf}, {3, 1, 4, 1}));
    EXPECT_TRUE(is_orthogonal(TropicalVector(4), {3, 1, 4, 1}));
    EXPECT_THROW(is_orthogonal({0, 0}, {0, 0, 0}), InvalidArgument);
}

TEST(IsOrthogonal, ShiftInvariant) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        TropicalVector x(4), y(4);
        for (std::size_t k = 0; k < 4; ++k) {
            x[k] = uniform_int(rng, 0, 3) == 0 ? inf : TropicalScalar(static_cast<long long>(uniform_int(rng, -2, 2)));
            y[k] = static_cast<long long>(uniform_int(rng, -2, 2));
        }
        const Rational lambda = random_rational(rng, 3, 4);
        EXPECT_EQ(is_orthogonal(x, y), is_orthogonal(x.shifted(lambda), y));
        EXPECT_EQ(is_orthogonal(x, y), is_orthogonal(x, y.shifted(lambda)));
    }
}

TEST(Tdet, Examples) {
    EXPECT_EQ(tdet(TropicalMatrix{{0, inf}, {inf, 0}}), TropicalScalar(0));
    EXPECT_EQ(tdet(TropicalMatrix{{1, 2}, {3, 4}}), TropicalScalar(5));
    EXPECT_EQ(tdet(TropicalMatrix{{0, inf}, {inf, inf}}), inf);
    EXPECT_THROW(tdet(TropicalMatrix(2, 3)), InvalidArgument);
}

TEST(Tdet, MatchesPermutationOracle) {
    Rng rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        TropicalMatrix a(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                a(r, c) = uniform_int(rng, 0, 3) == 0 ? inf : TropicalScalar(random_rational(rng, 3, 2));
            }
        }
        EXPECT_EQ(tdet(a), oracle::tdet(a));
    }
}

TEST(TropicalMatrix, RejectsEmptyAndSelectsColumns) {
    EXPECT_THROW(TropicalMatrix(0, 2), InvalidArgument);
    const TropicalMatrix a{{1, 2, 3}, {4, 5, 6}};
    const std::vector<std::size_t> keep{0, 2};
    EXPECT_EQ(a.columns(keep), (TropicalMatrix{{1, 3}, {4, 6}}));
}
