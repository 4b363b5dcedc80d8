#pragma once

// Systems of difference constraints x_j − x_k ≤ c (or < c, or = c) over Q.
// Feasibility is decided by Bellman–Ford on lexicographic weights (c, s) standing
// for c − s·ε, where s counts strict edges and ε is a positive infinitesimal.

#include <troplin/rational.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace troplin {

/// x_lhs − x_rhs ≤ bound, or < bound when strict. Variables are 0-based.
struct DifferenceConstraint {
    int lhs;
    int rhs;
    Rational bound;
    bool strict = false;

    std::string str() const {
        return "x" + std::to_string(lhs) + " - x" + std::to_string(rhs) + (strict ? " < " : " <= ") +
               format_rational(bound);
    }
};

/// x_lhs − x_rhs = value.
struct DifferenceEquality {
    int lhs;
    int rhs;
    Rational value;
};

class DifferenceSystem {
public:
    explicit DifferenceSystem(int variables) : variables_(variables) {
        if (variables < 0) throw InvalidArgument("DifferenceSystem: negative variable count");
    }

    int variables() const noexcept { return variables_; }
    const std::vector<DifferenceConstraint>& constraints() const noexcept { return constraints_; }
    const std::vector<DifferenceEquality>& equalities() const noexcept { return equalities_; }

    void add_le(int lhs, int rhs, Rational bound) { add({lhs, rhs, std::move(bound), false}); }
    void add_lt(int lhs, int rhs, Rational bound) { add({lhs, rhs, std::move(bound), true}); }

    void add(DifferenceConstraint c) {
        check(c.lhs, c.rhs);
        constraints_.push_back(std::move(c));
    }

    void add_eq(int lhs, int rhs, Rational value) {
        check(lhs, rhs);
        equalities_.push_back({lhs, rhs, std::move(value)});
    }

    /// A self-referencing constraint with a negative bound (0 ≤ c < 0, or 0 < c ≤ 0).
    bool has_trivially_infeasible_constraint() const {
        for (const auto& c : constraints_) {
            if (c.lhs == c.rhs && (c.bound < 0 || (c.strict && c.bound == 0))) return true;
        }
        for (const auto& e : equalities_) {
            if (e.lhs == e.rhs && e.value != 0) return true;
        }
        return false;
    }

    /// Equalities expanded into pairs of non-strict inequalities, after the inequalities.
    std::vector<DifferenceConstraint> as_inequalities() const {
        std::vector<DifferenceConstraint> out = constraints_;
        for (const auto& e : equalities_) {
            out.push_back({e.lhs, e.rhs, e.value, false});
            out.push_back({e.rhs, e.lhs, -e.value, false});
        }
        return out;
    }

    bool satisfied_by(const Point& x) const {
        if (x.size() != static_cast<std::size_t>(variables_)) return false;
        for (const auto& c : constraints_) {
            const Rational diff = x[static_cast<std::size_t>(c.lhs)] - x[static_cast<std::size_t>(c.rhs)];
            if (c.strict ? !(diff < c.bound) : (c.bound < diff)) return false;
        }
        for (const auto& e : equalities_) {
            if (x[static_cast<std::size_t>(e.lhs)] - x[static_cast<std::size_t>(e.rhs)] != e.value) return false;
        }
        return true;
    }

private:
    void check(int lhs, int rhs) const {
        if (lhs < 0 || rhs < 0 || lhs >= variables_ || rhs >= variables_) {
            throw InvalidArgument("DifferenceSystem: variable index out of range");
        }
    }

    int variables_;
    std::vector<DifferenceConstraint> constraints_;
    std::vector<DifferenceEquality> equalities_;
};

/// A cycle of constraints whose sum reads 0 ≤ weight (weight < 0) or 0 < 0.
struct InfeasibilityCertificate {
    std::vector<DifferenceConstraint> cycle;
    Rational weight;
    int strict_edges = 0;
};

struct SolveResult {
    std::optional<Point> witness;
    std::optional<InfeasibilityCertificate> certificate;

    bool feasible() const noexcept { return witness.has_value(); }
};

namespace detail {

// c − s·ε, compared lexicographically.
struct EpsWeight {
    Rational value;
    int strict = 0;

    friend bool operator<(const EpsWeight& a, const EpsWeight& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.strict > b.strict;
    }
};

}  // namespace detail

/// Decides feasibility. A feasible answer carries a rational witness meeting every
/// constraint exactly (strict ones strictly); an infeasible one carries a cycle.
inline SolveResult solve(const DifferenceSystem& sys) {
    using detail::EpsWeight;
    const int nv = sys.variables();
    const auto edges = sys.as_inequalities();

    // Edge rhs → lhs with weight (bound, strict). A virtual source reaches every
    // variable at weight 0, so every dist starts at 0.
    std::vector<EpsWeight> dist(static_cast<std::size_t>(nv));
    std::vector<int> pred(static_cast<std::size_t>(nv), -1);

    int relaxed_vertex = -1;
    for (int round = 0; round <= nv; ++round) {
        relaxed_vertex = -1;
        for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
            const auto& e = edges[static_cast<std::size_t>(k)];
            const auto& du = dist[static_cast<std::size_t>(e.rhs)];
            EpsWeight candidate{du.value + e.bound, du.strict + (e.strict ? 1 : 0)};
            auto& dv = dist[static_cast<std::size_t>(e.lhs)];
            if (candidate < dv) {
                dv = std::move(candidate);
                pred[static_cast<std::size_t>(e.lhs)] = k;
                relaxed_vertex = e.lhs;
            }
        }
        if (relaxed_vertex < 0) break;
    }

    SolveResult result;
    if (relaxed_vertex >= 0) {
        // Walk back nv steps to land on the negative cycle, then collect it.
        int v = relaxed_vertex;
        auto pred_edge = [&](int w) -> const DifferenceConstraint& {
            const int k = pred[static_cast<std::size_t>(w)];
            if (k < 0) throw InternalError("difference system: broken predecessor chain");
            return edges[static_cast<std::size_t>(k)];
        };
        for (int step = 0; step < nv; ++step) v = pred_edge(v).rhs;
        InfeasibilityCertificate cert;
        cert.weight = 0;
        int u = v;
        do {
            const auto& e = pred_edge(u);
            cert.cycle.push_back(e);
            cert.weight += e.bound;
            cert.strict_edges += e.strict ? 1 : 0;
            u = e.rhs;
        } while (u != v);
        std::reverse(cert.cycle.begin(), cert.cycle.end());
        result.certificate = std::move(cert);
        return result;
    }

    // Substitute ε = 1, 1/2, 1/4, ... until every constraint holds.
    Rational eps = 1;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Point x(static_cast<std::size_t>(nv));
        for (int j = 0; j < nv; ++j) {
            const auto& d = dist[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(j)] = d.value - eps * d.strict;
        }
        if (sys.satisfied_by(x)) {
            result.witness = std::move(x);
            return result;
        }
        eps /= 2;
    }
    throw InternalError("difference system: no witness found for a feasible system");
}

/// Connected components of the graph on the variables whose edges are the equalities.
inline int equality_components(const DifferenceSystem& sys) {
    std::vector<int> parent(static_cast<std::size_t>(sys.variables()));
    for (int j = 0; j < sys.variables(); ++j) parent[static_cast<std::size_t>(j)] = j;
    auto find = [&](int j) {
        while (parent[static_cast<std::size_t>(j)] != j) {
            parent[static_cast<std::size_t>(j)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(j)])];
            j = parent[static_cast<std::size_t>(j)];
        }
        return j;
    };
    int components = sys.variables();
    for (const auto& e : sys.equalities()) {
        const int a = find(e.lhs);
        const int b = find(e.rhs);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

/// The closure of the solution set has recession cone R·1 iff the digraph with an
/// arc rhs → lhs per constraint (both ways for equalities) is strongly connected.
inline bool is_bounded(const DifferenceSystem& sys) {
    const int nv = sys.variables();
    if (nv <= 1) return true;
    std::vector<std::vector<int>> forward(static_cast<std::size_t>(nv));
    std::vector<std::vector<int>> backward(static_cast<std::size_t>(nv));
    for (const auto& c : sys.as_inequalities()) {
        forward[static_cast<std::size_t>(c.rhs)].push_back(c.lhs);
        backward[static_cast<std::size_t>(c.lhs)].push_back(c.rhs);
    }
    auto reaches_all = [nv](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(static_cast<std::size_t>(nv), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == nv;
    };
    return reaches_all(forward) && reaches_all(backward);
}

}  // namespace troplin
