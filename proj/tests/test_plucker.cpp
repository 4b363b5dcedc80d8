#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace troplin;

namespace {

const TropicalScalar inf = TropicalScalar::infinity();

PlueckerVector two_bases() {
    PlueckerVector p(4, 3);
    p.set({1, 2, 3}, 0);
    p.set({1, 2, 4}, 0);
    return p;
}

std::vector<PlueckerVector> sample_vectors() {
    std::vector<PlueckerVector> out{fixtures::octahedron_split(), fixtures::snowflake(), fixtures::uniform_zero(5, 2),
                                    PlueckerVector::validated(two_bases()), tau(fixtures::partial_heights())};
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = static_cast<int>(uniform_int(rng, 3, 6));
        const int m = static_cast<int>(uniform_int(rng, 1, n - 1));
        out.push_back(tau(random_height_matrix(rng, m, n, random_subset(rng, n, m), 35)));
    }
    return out;
}

PlueckerVector shifted(const PlueckerVector& p, const Rational& lambda) {
    PlueckerVector q(p.n(), p.m());
    for (Subset s : p.support()) q.set(s, Rational(p[s].value() + lambda));
    return PlueckerVector::validated(std::move(q));
}

}  // namespace

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(fixtures::octahedron_split()).valid());
    EXPECT_TRUE(validate(PlueckerVector::constant(5, 3, 0)).valid());
    const auto report = validate(fixtures::broken_octahedron());
    EXPECT_FALSE(report.valid());
    ASSERT_FALSE(report.failures.empty());
    for (const auto& f : report.failures) {
        std::vector<TropicalScalar> values;
        for (const auto& term : f.terms) values.push_back(term.second);
        std::sort(values.begin(), values.end());
        EXPECT_EQ(values, (std::vector<TropicalScalar>{-1, 0, 0}));
    }
}

TEST(Validate, EmptySupportAndExchange) {
    EXPECT_FALSE(validate(PlueckerVector(4, 2)).support_nonempty);
    PlueckerVector p(4, 2);
    p.set({1, 2}, 0);
    p.set({3, 4}, 0);
    const auto report = validate(p);
    EXPECT_FALSE(report.valid());
    ASSERT_TRUE(report.exchange_failure.has_value());
    EXPECT_THROW(PlueckerVector::validated(p), InvalidArgument);
}

TEST(Validate, ThreeTermRelationsOnRandomM2Vectors) {
    // For m = 2 the relations reduce to the four-point condition on each 4-set.
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        PlueckerVector p(4, 2);
        for (Subset s : k_subsets(4, 2)) p.set(s, static_cast<long long>(uniform_int(rng, -1, 1)));
        const TropicalScalar terms[] = {t_plus(p[{1, 2}], p[{3, 4}]), t_plus(p[{1, 3}], p[{2, 4}]), t_plus(p[{1, 4}], p[{2, 3}])};
        EXPECT_EQ(validate(p).valid(), min_achieved_twice(terms));
    }
}

TEST(PlueckerVector, SetClearsValidationAndLexSupport) {
    PlueckerVector p = fixtures::octahedron_split();
    EXPECT_TRUE(p.is_validated());
    p.set({1, 2}, 0);
    EXPECT_FALSE(p.is_validated());
    const auto support = p.support();
    EXPECT_TRUE(std::is_sorted(support.begin(), support.end()));
    EXPECT_THROW(p.set({1, 2, 3}, 0), InvalidArgument);
    EXPECT_THROW(underlying_matroid(fixtures::broken_octahedron()), InvalidArgument);
}

TEST(UnderlyingMatroid, Examples) {
    EXPECT_EQ(underlying_matroid(fixtures::octahedron_split()), Matroid::uniform(2, 4));
    EXPECT_EQ(underlying_matroid(fixtures::uniform_zero(4, 2)), Matroid::uniform(2, 4));
    EXPECT_EQ(underlying_matroid(PlueckerVector::validated(two_bases())), Matroid::from_bases(4, {{1, 2, 3}, {1, 2, 4}}));
}

TEST(Circuit, Examples) {
    const auto p = fixtures::octahedron_split();
    EXPECT_EQ(circuit(p, {1, 2, 3})->vector, (TropicalVector{0, 0, 1, inf}));
    EXPECT_EQ(circuit(fixtures::uniform_zero(4, 2), {1, 2, 3})->vector, (TropicalVector{0, 0, 0, inf}));
    EXPECT_EQ(circuit(PlueckerVector::validated(two_bases()), {1, 2, 3, 4})->vector, (TropicalVector{inf, inf, 0, 0}));
    EXPECT_THROW(circuit(p, {1, 2}), InvalidArgument);
}

TEST(AllCircuits, Examples) {
    const auto circuits = all_circuits(fixtures::octahedron_split());
    ASSERT_EQ(circuits.size(), 4u);
    EXPECT_EQ(circuits[0].support(), (Subset{1, 2, 3}));
    EXPECT_EQ(circuits[1].support(), (Subset{1, 2, 4}));
    EXPECT_EQ(circuits[2].support(), (Subset{1, 3, 4}));
    EXPECT_EQ(circuits[3].support(), (Subset{2, 3, 4}));

    const auto u13 = all_circuits(fixtures::uniform_zero(3, 1));
    ASSERT_EQ(u13.size(), 3u);
    for (const auto& c : u13) EXPECT_EQ(c.support().size(), 2);

    const auto partial = all_circuits(PlueckerVector::validated(two_bases()));
    ASSERT_EQ(partial.size(), 1u);
    EXPECT_EQ(partial[0].support(), (Subset{3, 4}));
}

TEST(AllCircuits, SupportsAreTheMatroidCircuits) {
    for (const auto& p : sample_vectors()) {
        std::vector<Subset> supports;
        for (const auto& c : all_circuits(p)) {
            supports.push_back(c.support());
            auto best = *std::min_element(c.vector.begin(), c.vector.end());
            EXPECT_EQ(best, TropicalScalar(0));
        }
        EXPECT_EQ(supports, oracle::circuits(underlying_matroid(p)));
    }
}

TEST(FundamentalCircuit, ValuedExamples) {
    const auto p = fixtures::octahedron_split();
    EXPECT_EQ(fundamental_circuit(p, 2, {1, 4}).vector, (TropicalVector{0, 0, inf, 1}));
    EXPECT_EQ(fundamental_circuit(p, 3, {1, 4}).vector, (TropicalVector{1, inf, 0, 0}));
    EXPECT_EQ(fundamental_circuit(fixtures::uniform_zero(3, 2), 3, {1, 2}).vector, (TropicalVector{0, 0, 0}));
    EXPECT_THROW(fundamental_circuit(p, 1, {1, 4}), InvalidArgument);
}

TEST(Weight, Examples) {
    const auto p = fixtures::octahedron_split();
    EXPECT_EQ(weight(p, {0, 0, 0, 0}, {1, 4}), Rational(0));
    EXPECT_EQ(weight(p, {0, 0, 0, 0}, {1, 2}), Rational(-1));
    const auto s = fixtures::snowflake();
    for (Subset b : s.support()) EXPECT_EQ(weight(s, Point(6), b), -s[b].value());
}

TEST(MatroidAt, Examples) {
    const auto p = fixtures::octahedron_split();
    EXPECT_EQ(matroid_at(p, {0, 0, 0, 0}), Matroid::from_bases(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    const auto m = matroid_at(p, {0, 0, 0, -5});
    EXPECT_EQ(m, Matroid::from_bases(4, {{1, 3}, {2, 3}}));
    EXPECT_EQ(loops(m), (Subset{4}));
    EXPECT_EQ(matroid_at(fixtures::uniform_zero(5, 2), {0, 3, -1, 2, 1}), Matroid::from_bases(5, {{2, 4}}));
}

TEST(Contains, Examples) {
    const auto p = fixtures::octahedron_split();
    EXPECT_TRUE(contains(p, {0, 0, 0, 0}));
    EXPECT_FALSE(contains(p, {0, 0, 0, -5}));
    EXPECT_TRUE(contains(p, {0, -1, -2, -2}));
    EXPECT_THROW(contains(p, {0, 0}), InvalidArgument);
    EXPECT_THROW(contains(fixtures::broken_octahedron(), {0, 0, 0, 0}), InvalidArgument);
}

TEST(Contains, RoutesAgreeAndAreShiftInvariant) {
    Rng rng(33);
    for (const auto& p : sample_vectors()) {
        const auto q = shifted(p, Rational(7, 3));
        for (int trial = 0; trial < 60; ++trial) {
            const Point v = membership_sample(rng, p, trial);
            const bool inside = contains_by_loopless(p, v);
            EXPECT_EQ(contains_by_circuits(p, v), inside);
            Point w = v;
            const Rational lambda = random_rational(rng, 3, 5);
            for (auto& x : w) x += lambda;
            EXPECT_EQ(contains(p, w), inside);
            EXPECT_EQ(matroid_at(p, w), matroid_at(p, v));
            EXPECT_EQ(contains(q, v), inside);
        }
    }
}

TEST(Contains, SampleCoversBothOutcomes) {
    Rng rng(34);
    const auto p = fixtures::snowflake();
    int inside = 0;
    for (int trial = 0; trial < 300; ++trial) inside += contains(p, membership_sample(rng, p, trial));
    EXPECT_GT(inside, 50);
    EXPECT_LT(inside, 250);
}

TEST(Eliminate, Examples) {
    const auto p = fixtures::octahedron_split();
    const TropicalVector d{0, 0, 1, inf};
    const TropicalVector e{0, 0, inf, 1};
    EXPECT_EQ(eliminate(p, d, e, 3, 1), (TropicalVector{inf, 2, 1, 1}));
    EXPECT_EQ(eliminate(p, d, e, 3, 2), (TropicalVector{2, inf, 1, 1}));
    EXPECT_THROW(eliminate(p, e, d, 3, 1), InvalidArgument);
    EXPECT_THROW(eliminate(p, d, e.shifted(1), 3, 1), InvalidArgument);
    EXPECT_THROW(eliminate(p, d, {0, 0, 0, 0}, 3, 1), InvalidArgument);
}

TEST(Eliminate, HoldsOnAllAdmissiblePairsOfSmallFixtures) {
    SelfTestOptions opt;
    const auto result = check_elimination(opt);
    EXPECT_GT(result.trials, 0u);
    EXPECT_EQ(result.failures, 0u) << result.detail;
}
