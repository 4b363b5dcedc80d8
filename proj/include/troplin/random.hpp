#pragma once

// Seeded generators for randomized checks. Integers are drawn from raw mt19937_64
// output so a seed reproduces the same instances on every platform.

#include <troplin/conical.hpp>

#include <random>

namespace troplin {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
inline long uniform_int(Rng& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

/// numerator in [-range, range], denominator in [1, max_den].
inline Rational random_rational(Rng& rng, long range, long max_den) {
    const long den = uniform_int(rng, 1, max_den);
    return Rational(uniform_int(rng, -range * den, range * den), den);
}

inline Point random_point(Rng& rng, int n, long range, long max_den) {
    Point v;
    for (int k = 0; k < n; ++k) v.push_back(random_rational(rng, range, max_den));
    return v;
}

inline Subset random_subset(Rng& rng, int n, int k) {
    std::vector<int> pool;
    for (int e = 1; e <= n; ++e) pool.push_back(e);
    for (int j = 0; j < k; ++j) std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(uniform_int(rng, j, n - 1))]);
    return Subset::from_elements(std::span<const int>(pool.data(), static_cast<std::size_t>(k)));
}

/// Small rational heights; each entry is ∞ with probability `inf_percent`/100, but
/// every column keeps at least one finite entry.
inline HeightMatrix random_height_matrix(Rng& rng, int m, int n, Subset basis, int inf_percent) {
    TropicalMatrix v(static_cast<std::size_t>(m), static_cast<std::size_t>(n - m));
    for (std::size_t c = 0; c < v.cols(); ++c) {
        const auto keep = static_cast<std::size_t>(uniform_int(rng, 0, m - 1));
        for (std::size_t r = 0; r < v.rows(); ++r) {
            const bool infinite = r != keep && uniform_int(rng, 0, 99) < inf_percent;
            v(r, c) = infinite ? TropicalScalar::infinity() : TropicalScalar(random_rational(rng, 5, 3));
        }
    }
    return HeightMatrix(n, basis, std::move(v));
}

/// Integer heights drawn from a range of size 100·n², each perturbed by 1/P^k with
/// P = 1009 and a distinct k per entry. Distinct perturbation powers make every
/// optimal assignment unique, so the result is generic.
inline HeightMatrix generic_height_matrix(Rng& rng, int m, int n, Subset basis) {
    constexpr long kPrime = 1009;
    TropicalMatrix v(static_cast<std::size_t>(m), static_cast<std::size_t>(n - m));
    BigInt power = 1;
    const long range = 100L * n * n;
    for (std::size_t r = 0; r < v.rows(); ++r) {
        for (std::size_t c = 0; c < v.cols(); ++c) {
            power *= kPrime;
            v(r, c) = TropicalScalar(Rational(uniform_int(rng, 0, range - 1)) + Rational(BigInt(1), power));
        }
    }
    return HeightMatrix(n, basis, std::move(v));
}

}  // namespace troplin
