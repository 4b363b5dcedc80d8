#pragma once

// Plücker vectors τ_V built from height matrices on a vertex figure, conical
// tropical linear spaces, and the tree picture of rank-2 spaces.

#include <troplin/complex.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace troplin {

/// Heights V ∈ T^{B × ([n]∖B)}: rows follow B ascending, columns [n]∖B ascending.
class HeightMatrix {
public:
    HeightMatrix(int n, Subset basis, TropicalMatrix heights)
        : n_(n), basis_(basis), heights_(std::move(heights)) {
        if (n < 2 || n > kMaxGroundSet) throw InvalidArgument("height matrix: n out of range");
        if (basis.empty() || !Subset::full(n).contains(basis)) throw InvalidArgument("height matrix: B must be a nonempty subset of [n]");
        if (basis.size() == n) throw InvalidArgument("height matrix: B must be a proper subset of [n]");
        if (heights_.rows() != static_cast<std::size_t>(basis.size()) ||
            heights_.cols() != static_cast<std::size_t>(n - basis.size())) {
            throw InvalidArgument("height matrix: V must be |B| x (n - |B|)");
        }
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return basis_.size(); }
    Subset basis() const noexcept { return basis_; }
    const TropicalMatrix& heights() const noexcept { return heights_; }

    /// [n]∖B ascending; column k of V belongs to element columns()[k].
    std::vector<int> columns() const { return (Subset::full(n_) - basis_).elements(); }

    /// I_j = { i ∈ B : V[i][j] ≠ ∞ }, keyed by j ∈ [n]∖B.
    std::map<int, Subset> families() const {
        std::map<int, Subset> out;
        const auto rows = basis_.elements();
        const auto cols = columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Subset family;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (heights_(r, c).is_finite()) family = family.with(rows[r]);
            }
            out[cols[c]] = family;
        }
        return out;
    }

    /// Columns j with I_j = ∅; each is a loop of the transversal matroid.
    Subset empty_columns() const {
        Subset out;
        for (const auto& [j, family] : families()) {
            if (family.empty()) out = out.with(j);
        }
        return out;
    }

    friend bool operator==(const HeightMatrix&, const HeightMatrix&) = default;

private:
    int n_;
    Subset basis_;
    TropicalMatrix heights_;
};

/// V̄: the m×n matrix with the tropical identity on the columns of B and V elsewhere.
inline TropicalMatrix augment(const HeightMatrix& v) {
    const int m = v.m();
    TropicalMatrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(v.n()));
    const auto rows = v.basis().elements();
    for (std::size_t r = 0; r < rows.size(); ++r) out(r, static_cast<std::size_t>(rows[r] - 1)) = 0;
    const auto cols = v.columns();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, static_cast<std::size_t>(cols[c] - 1)) = v.heights()(r, c);
    }
    return out;
}

/// (τ_V)_A = tdet(V̄_A) for every m-subset A. The result is validated, and its
/// underlying matroid is checked against the transversal matroid of the I_j.
inline PlueckerVector tau(const HeightMatrix& v) {
    const TropicalMatrix bar = augment(v);
    PlueckerVector p(v.n(), v.m());
    for (Subset a : k_subsets(v.n(), v.m())) {
        std::vector<std::size_t> keep;
        for (int e : a.elements()) keep.push_back(static_cast<std::size_t>(e - 1));
        p.set(a, tdet(bar.columns(keep)));
    }
    const ValidationReport report = validate(p);
    if (!report.valid()) {
        throw InternalError("tau_V failed validation" +
                            (report.failures.empty() ? std::string() : ": " + report.failures.front().str()));
    }
    p = PlueckerVector::validated(std::move(p));
    if (underlying_matroid(p) != transversal(v.n(), v.basis(), v.families())) {
        throw InternalError("underlying matroid of tau_V is not the principal transversal matroid");
    }
    return p;
}

namespace detail {

inline void count_optimal(const TropicalMatrix& a, std::size_t row, std::uint32_t used, const Rational& partial,
                          std::optional<Rational>& best, int& count) {
    if (row == a.rows()) {
        if (!best || partial < *best) {
            best = partial;
            count = 1;
        } else if (partial == *best) {
            ++count;
        }
        return;
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if ((used >> c) & 1U || a(row, c).is_infinite()) continue;
        count_optimal(a, row + 1, used | (std::uint32_t{1} << c), partial + a(row, c).value(), best, count);
    }
}

}  // namespace detail

/// V is generic when every square submatrix with finite tropical determinant attains it
/// by a single permutation; the induced subdivision of the vertex figure is then fine.
inline bool is_generic(const HeightMatrix& v) {
    const auto& h = v.heights();
    const int rows = static_cast<int>(h.rows());
    const int cols = static_cast<int>(h.cols());
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        for (Subset rs : k_subsets(rows, k)) {
            for (Subset cs : k_subsets(cols, k)) {
                TropicalMatrix sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
                const auto re = rs.elements();
                const auto ce = cs.elements();
                for (int r = 0; r < k; ++r) {
                    for (int c = 0; c < k; ++c) {
                        sub(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                            h(static_cast<std::size_t>(re[static_cast<std::size_t>(r)] - 1),
                              static_cast<std::size_t>(ce[static_cast<std::size_t>(c)] - 1));
                    }
                }
                std::optional<Rational> best;
                int count = 0;
                detail::count_optimal(sub, 0, 0, Rational(0), best, count);
                if (best && count > 1) return false;
            }
        }
    }
    return true;
}

struct ConicalReport {
    bool conical = false;
    std::optional<Subset> witness;
};

/// Conical iff some basis B lies in the face matroid of every bounded cell; the
/// witness is the lexicographically least such B.
inline ConicalReport is_conical(const PlueckerVector& p, const std::vector<Cell>& cells) {
    ConicalReport report;
    for (Subset b : p.support()) {
        const bool common = std::all_of(cells.begin(), cells.end(),
                                        [b](const Cell& c) { return !c.bounded || c.face.is_basis(b); });
        if (common) {
            report.conical = true;
            report.witness = b;
            return report;
        }
    }
    return report;
}

inline ConicalReport is_conical(const PlueckerVector& p, const EnumerationLimits& limits = {}) {
    return is_conical(p, enumerate_cells(p, limits));
}

/// A rank-2 tropical linear space modulo lineality: internal nodes are the cells of
/// dimension 1, internal edges the bounded cells of dimension 2, and each leaf i is
/// the unbounded ray whose face matroid has i as a coloop.
struct Tree {
    int leaves = 0;
    std::vector<Matroid> nodes;
    std::vector<std::pair<int, int>> edges;
    /// leaf_node[i-1] is the internal node that leaf i hangs from.
    std::vector<int> leaf_node;
};

namespace detail {

inline bool bases_included(const Matroid& small, const Matroid& big) {
    const auto& b = big.bases();
    return std::all_of(small.bases().begin(), small.bases().end(),
                       [&b](Subset s) { return std::binary_search(b.begin(), b.end(), s); });
}

// Elements lying in every basis.
inline Subset coloops(const Matroid& m) {
    Subset out = Subset::full(m.ground_size());
    for (Subset b : m.bases()) out = out & b;
    return out;
}

inline void check_tree(const Tree& t) {
    const int k = static_cast<int>(t.nodes.size());
    if (k == 0) throw InternalError("tree has no internal nodes");
    if (static_cast<int>(t.edges.size()) != k - 1) throw InternalError("internal graph is not a tree (edge count)");
    std::vector<int> parent(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) parent[static_cast<std::size_t>(j)] = j;
    auto find = [&](int j) {
        while (parent[static_cast<std::size_t>(j)] != j) j = parent[static_cast<std::size_t>(j)];
        return j;
    };
    for (auto [a, b] : t.edges) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) throw InternalError("internal graph has a cycle");
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    for (int leaf = 0; leaf < t.leaves; ++leaf) {
        if (t.leaf_node[static_cast<std::size_t>(leaf)] < 0) {
            throw InternalError("leaf " + std::to_string(leaf + 1) + " has no ray");
        }
    }
}

}  // namespace detail

/// Assembles the tree from the enumerated cells of a rank-2 space with uniform support.
inline Tree build_tree(const PlueckerVector& p, const std::vector<Cell>& cells) {
    detail::require_validated(p, "build_tree");
    if (p.m() != 2) throw InvalidArgument("build_tree: requires m = 2");
    if (p.n() < 3) throw InvalidArgument("build_tree: requires n >= 3");
    if (p.support().size() != detail::small_binomial(p.n(), 2)) {
        throw InvalidArgument("build_tree: requires uniform support U_{2,n}");
    }
    Tree tree;
    tree.leaves = p.n();
    tree.leaf_node.assign(static_cast<std::size_t>(p.n()), -1);
    for (const auto& c : cells) {
        if (c.dim == 1) tree.nodes.push_back(c.face);
    }
    auto containing = [&](const Matroid& face) {
        std::vector<int> out;
        for (int k = 0; k < static_cast<int>(tree.nodes.size()); ++k) {
            if (detail::bases_included(face, tree.nodes[static_cast<std::size_t>(k)])) out.push_back(k);
        }
        return out;
    };
    for (const auto& c : cells) {
        if (c.dim != 2) continue;
        const auto ends = containing(c.face);
        if (c.bounded) {
            if (ends.size() != 2) throw InternalError("bounded edge " + c.face.str() + " does not join two nodes");
            tree.edges.emplace_back(ends[0], ends[1]);
            continue;
        }
        const Subset label = detail::coloops(c.face);
        if (label.size() != 1 || ends.size() != 1) {
            throw InternalError("ray " + c.face.str() + " has no unique label or attachment");
        }
        auto& slot = tree.leaf_node[static_cast<std::size_t>(label.min_element() - 1)];
        if (slot >= 0) throw InternalError("leaf " + label.str() + " labels two rays");
        slot = ends[0];
    }
    detail::check_tree(tree);
    return tree;
}

inline Tree build_tree(const PlueckerVector& p, const EnumerationLimits& limits = {}) {
    return build_tree(p, enumerate_cells(p, limits));
}

/// A caterpillar has a leaf-to-leaf path through every internal node, i.e. the
/// internal nodes induce a path.
inline bool is_caterpillar(const Tree& t) {
    std::vector<int> degree(t.nodes.size(), 0);
    for (auto [a, b] : t.edges) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
}

/// DOT with internal nodes v0, v1, ... and leaves L1..Ln.
inline std::string to_dot(const Tree& t) {
    std::ostringstream out;
    out << "graph tree {\n";
    for (std::size_t k = 0; k < t.nodes.size(); ++k) out << "  v" << k << " [shape=point];\n";
    for (int leaf = 1; leaf <= t.leaves; ++leaf) out << "  L" << leaf << " [shape=plaintext,label=\"" << leaf << "\"];\n";
    for (auto [a, b] : t.edges) out << "  v" << a << " -- v" << b << ";\n";
    for (int leaf = 1; leaf <= t.leaves; ++leaf) {
        out << "  v" << t.leaf_node[static_cast<std::size_t>(leaf - 1)] << " -- L" << leaf << ";\n";
    }
    out << "}\n";
    return out.str();
}

/// One line per internal node: "v0: leaves 1 2; neighbours v1".
inline std::string to_text(const Tree& t) {
    std::ostringstream out;
    for (int k = 0; k < static_cast<int>(t.nodes.size()); ++k) {
        out << "v" << k << ": leaves";
        for (int leaf = 1; leaf <= t.leaves; ++leaf) {
            if (t.leaf_node[static_cast<std::size_t>(leaf - 1)] == k) out << " " << leaf;
        }
        out << "; neighbours";
        for (auto [a, b] : t.edges) {
            if (a == k) out << " v" << b;
            if (b == k) out << " v" << a;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace troplin
