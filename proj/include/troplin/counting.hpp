#pragma once

// Closed-form face counts: upper bounds for the f-vector of an m-dimensional local
// tropical linear space in R^n, and face counts of fine mixed subdivisions of s·Δ_{r−1}.

#include <troplin/rational.hpp>

#include <initializer_list>

namespace troplin {

/// C(n, k); zero outside 0 ≤ k ≤ n.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (long j = 1; j <= k; ++j) {
        out *= n - k + j;
        out /= j;
    }
    return out;
}

/// total! / (parts_1! ⋯ parts_r!); zero when any part is negative or the parts do not sum to total.
inline BigInt multinomial(long total, std::initializer_list<long> parts) {
    long sum = 0;
    for (long part : parts) {
        if (part < 0) return 0;
        sum += part;
    }
    if (sum != total) return 0;
    BigInt out = 1;
    long remaining = total;
    for (long part : parts) {
        out *= binomial(remaining, part);
        remaining -= part;
    }
    return out;
}

/// Most i-dimensional faces that are bounded modulo R·1: C(n−i−1, i−1)·C(n−2i, m−i).
inline BigInt bound_bounded(long n, long m, long i) {
    if (i < 1 || i > m || m > n) return 0;
    return binomial(n - i - 1, i - 1) * binomial(n - 2 * i, m - i);
}

/// Most i-dimensional faces of a local space, bounded or not: C(n−i−1, m−i)·C(n−1, i−1).
inline BigInt bound_total(long n, long m, long i) {
    if (i < 1 || i > m || m > n) return 0;
    return binomial(n - i - 1, m - i) * binomial(n - 1, i - 1);
}

/// k-dimensional interior faces of a fine mixed subdivision of s·Δ_{r−1}:
/// multinomial(s−1+k; s−r+k, r−1−k, k).
inline BigInt mixed_interior_count(long s, long r, long k) {
    if (s < 1 || k < 0 || k > r - 1) return 0;
    return multinomial(s - 1 + k, {s - r + k, r - 1 - k, k});
}

/// All k-dimensional faces of a fine mixed subdivision of s·Δ_{r−1}:
/// s/(s+k) · multinomial(r+s−1; s, r−1−k, k).
inline BigInt mixed_total_count(long s, long r, long k) {
    if (s < 1 || k < 0 || k > r - 1) return 0;
    const BigInt scaled = BigInt(s) * multinomial(r + s - 1, {s, r - 1 - k, k});
    if (scaled % (s + k) != 0) throw InternalError("mixed_total_count: non-integral face count");
    return scaled / (s + k);
}

}  // namespace troplin
