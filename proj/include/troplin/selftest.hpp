#pragma once

// Seeded randomized property suite. Every check reports its trial and failure counts;
// the suite passes when no check has failures.

#include <troplin/fixtures.hpp>

#include <functional>
#include <sstream>

namespace troplin {

struct CheckResult {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::string detail;  // first failure, if any

    bool passed() const { return failures == 0 && trials > 0; }
};

struct SelfTestOptions {
    std::uint64_t seed = 20240607;
    int heights_per_size = 100;
    int membership_points = 1000;
    int chart_points = 500;
    int projection_points = 200;
    EnumerationLimits limits;
};

struct NamedPlucker {
    std::string name;
    PlueckerVector p;
};

inline std::vector<NamedPlucker> selftest_fixtures() {
    return {
        {"octahedron_split", fixtures::octahedron_split()},
        {"snowflake", fixtures::snowflake()},
        {"uniform_zero_4_2", fixtures::uniform_zero(4, 2)},
        {"uniform_zero_5_3", fixtures::uniform_zero(5, 3)},
        {"partial_heights", tau(fixtures::partial_heights())},
        {"generic_heights_3_6", tau(fixtures::generic_heights_3_6())},
    };
}

namespace detail {

class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    /// Runs one trial; a false return or an exception counts as a failure.
    void trial(const std::function<bool()>& body, const std::function<std::string()>& describe) {
        ++result_.trials;
        std::string why;
        try {
            if (body()) return;
        } catch (const std::exception& ex) {
            why = std::string(": ") + ex.what();
        }
        if (++result_.failures == 1) result_.detail = describe() + why;
    }

    CheckResult result() const { return result_; }

private:
    CheckResult result_;
};

inline Subset random_basis(Rng& rng, const PlueckerVector& p) {
    const auto support = p.support();
    return support[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(support.size()) - 1))];
}

inline Point shifted(Point v, const Rational& lambda) {
    for (auto& x : v) x += lambda;
    return v;
}

}  // namespace detail

/// (a) tau(V) validates, has the transversal matroid, and every bounded cell contains B.
inline CheckResult check_tau_properties(const SelfTestOptions& opt) {
    detail::Tally tally("tau_properties");
    Rng rng(opt.seed);
    const std::pair<int, int> sizes[] = {{2, 4}, {2, 5}, {3, 5}, {3, 6}};
    for (auto [m, n] : sizes) {
        for (int k = 0; k < opt.heights_per_size; ++k) {
            const Subset basis = random_subset(rng, n, m);
            const HeightMatrix v = k % 2 == 0 ? generic_height_matrix(rng, m, n, basis)
                                              : random_height_matrix(rng, m, n, basis, k % 4 == 1 ? 30 : 0);
            tally.trial(
                [&] {
                    PlueckerVector p(n, m);
                    const TropicalMatrix full = augment(v);
                    for (Subset a : k_subsets(n, m)) {
                        std::vector<std::size_t> cols;
                        for (int e : a.elements()) cols.push_back(static_cast<std::size_t>(e - 1));
                        p.set(a, tdet(full.columns(cols)));
                    }
                    if (!validate(p).valid()) return false;
                    p = PlueckerVector::validated(std::move(p));
                    if (!(p == tau(v))) return false;
                    if (underlying_matroid(p) != transversal(n, basis, v.families())) return false;
                    if (!loops(underlying_matroid(p)).empty()) return true;
                    for (const auto& c : enumerate_cells(p, opt.limits)) {
                        if (c.bounded && !c.face.is_basis(basis)) return false;
                    }
                    return true;
                },
                [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " B=" + basis.str() + " trial " + std::to_string(k); });
        }
    }
    return tally.result();
}

/// Points on L(p): chart images of random x through random bases, optionally nudged
/// off the space in one coordinate.
inline Point membership_sample(Rng& rng, const PlueckerVector& p, int k) {
    if (k % 3 == 0) return random_point(rng, p.n(), 4, 3);
    const LocalContext ctx(p, detail::random_basis(rng, p));
    Point v = chart(ctx, random_point(rng, p.m(), 4, 2));
    if (k % 3 == 2) v[static_cast<std::size_t>(uniform_int(rng, 0, p.n() - 1))] += random_rational(rng, 1, 4);
    return v;
}

/// (b) contains via circuits agrees with contains via the loopless test.
inline CheckResult check_membership_routes(const SelfTestOptions& opt) {
    detail::Tally tally("membership_routes");
    Rng rng(opt.seed + 1);
    for (const auto& [name, p] : selftest_fixtures()) {
        const auto circuits = all_circuits(p);
        for (int k = 0; k < opt.membership_points; ++k) {
            const Point v = membership_sample(rng, p, k);
            tally.trial([&] { return contains_by_circuits(circuits, v) == contains_by_loopless(p, v); },
                        [&] { return name + " at " + format_point(v); });
        }
    }
    return tally.result();
}

/// (c) chart_inverse(chart(x)) = x, chart(x) ∈ L(p) ∩ Σ_B, and chart(x + λ1) = chart(x) + λ1.
inline CheckResult check_chart_round_trip(const SelfTestOptions& opt) {
    detail::Tally tally("chart_round_trip");
    Rng rng(opt.seed + 2);
    for (const auto& [name, p] : selftest_fixtures()) {
        for (int k = 0; k < opt.chart_points; ++k) {
            const LocalContext ctx(p, detail::random_basis(rng, p));
            const Point x = random_point(rng, p.m(), 5, 4);
            const Rational lambda = random_rational(rng, 3, 2);
            tally.trial(
                [&] {
                    const Point v = chart(ctx, x);
                    return chart_inverse(ctx, v) == x && contains(p, v) && in_sigma(ctx, v) &&
                           chart(ctx, detail::shifted(x, lambda)) == detail::shifted(v, lambda);
                },
                [&] { return name + " B=" + ctx.basis().str() + " x=" + format_point(x); });
        }
    }
    return tally.result();
}

/// (d) π(π(y)) = π(y) and π(y) ∈ L(p)_B for y ∈ Σ_B; π(v) = v for v ∈ L(p)_B.
inline CheckResult check_projection(const SelfTestOptions& opt) {
    detail::Tally tally("projection");
    Rng rng(opt.seed + 3);
    for (const auto& [name, p] : selftest_fixtures()) {
        for (int k = 0; k < opt.projection_points; ++k) {
            const Point y = random_point(rng, p.n(), 5, 3);
            const LocalContext ctx(p, projection_basis(p, y));
            tally.trial(
                [&] {
                    const Point pi = project(ctx, y);
                    return contains(p, pi) && in_local_space(ctx, pi) && project(ctx, pi) == pi;
                },
                [&] { return name + " idempotence at y=" + format_point(y); });
            const Point v = chart(ctx, random_point(rng, p.m(), 5, 3));
            tally.trial([&] { return project(ctx, v) == v; }, [&] { return name + " fixed point at v=" + format_point(v); });
        }
    }
    return tally.result();
}

/// (e) Elimination on every admissible pair: circuits d ≠ e, b with d_b, e_b finite,
/// e shifted so e_b = d_b, and a with d_a < e_a.
inline CheckResult check_elimination(const SelfTestOptions&) {
    detail::Tally tally("elimination");
    const NamedPlucker cases[] = {{"octahedron_split", fixtures::octahedron_split()}, {"snowflake", fixtures::snowflake()}};
    for (const auto& [name, p] : cases) {
        const auto circuits = all_circuits(p);
        for (const auto& d : circuits) {
            for (const auto& e0 : circuits) {
                if (d.support() == e0.support()) continue;
                for (int b : (d.support() & e0.support()).elements()) {
                    const auto ib = static_cast<std::size_t>(b - 1);
                    const TropicalVector e = e0.vector.shifted(d.vector[ib].value() - e0.vector[ib].value());
                    for (int a = 1; a <= p.n(); ++a) {
                        const auto ia = static_cast<std::size_t>(a - 1);
                        if (!(d.vector[ia] < e[ia])) continue;
                        tally.trial(
                            [&] {
                                const TropicalVector f = eliminate(p, d.vector, e, a, b);
                                if (f[ib].is_finite() || f[ia] != d.vector[ia] || !is_circuit_of(p, f)) return false;
                                for (std::size_t j = 0; j < f.size(); ++j) {
                                    if (f[j] < t_min(d.vector[j], e[j])) return false;
                                }
                                return true;
                            },
                            [&] { return name + " d=" + d.vector.str() + " e=" + e.str() + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
                    }
                }
            }
        }
    }
    return tally.result();
}

inline std::vector<CheckResult> run_selftest(const SelfTestOptions& opt = {}) {
    return {check_tau_properties(opt), check_membership_routes(opt), check_chart_round_trip(opt),
            check_projection(opt), check_elimination(opt)};
}

}  // namespace troplin
