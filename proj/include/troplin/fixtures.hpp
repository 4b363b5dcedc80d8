#pragma once

// Small named Plücker vectors used by the tests, the self-test and the docs.

#include <troplin/random.hpp>

namespace troplin::fixtures {

/// n = 4, m = 2: p_12 = p_34 = 1, all other coordinates 0. Its subdivision of Δ_{2,4}
/// is two square pyramids glued along the square {13,14,23,24}.
inline PlueckerVector octahedron_split() {
    PlueckerVector p = PlueckerVector::constant(4, 2, 0);
    p.set({1, 2}, 1);
    p.set({3, 4}, 1);
    return PlueckerVector::validated(std::move(p));
}

/// Same as octahedron_split() but with p_12 = −1 and p_34 = 0; breaks the single three-term relation.
inline PlueckerVector broken_octahedron() {
    PlueckerVector p = PlueckerVector::constant(4, 2, 0);
    p.set({1, 2}, -1);
    return p;
}

/// The constant-zero vector on U_{m,n}: the trivial subdivision.
inline PlueckerVector uniform_zero(int n, int m) { return PlueckerVector::validated(PlueckerVector::constant(n, m, 0)); }

/// n = 6, m = 2: p_ij = −d(i,j) for the tree with three cherries {1,2}, {3,4}, {5,6}
/// whose parents sit at distance 1 from a common centre; all edges have length 1.
inline PlueckerVector snowflake() {
    PlueckerVector p(6, 2);
    for (Subset s : k_subsets(6, 2)) {
        const auto e = s.elements();
        const bool cherry = (e[0] + 1) / 2 == (e[1] + 1) / 2;
        p.set(s, cherry ? -2 : -4);
    }
    return PlueckerVector::validated(std::move(p));
}

/// n = 5, m = 2, B = {1,2}: heights with ∞ entries, giving a non-uniform loopless
/// transversal matroid (I_3 = {1,2}, I_4 = {2}, I_5 = {1}).
inline HeightMatrix partial_heights() {
    const auto inf = TropicalScalar::infinity();
    return HeightMatrix(5, {1, 2}, TropicalMatrix{{0, inf, 1}, {2, 0, inf}});
}

/// m = 3, n = 6, B = {1,2,3}: generic heights from a fixed seed.
inline HeightMatrix generic_heights_3_6() {
    Rng rng(20240607);
    return generic_height_matrix(rng, 3, 6, {1, 2, 3});
}

}  // namespace troplin::fixtures
