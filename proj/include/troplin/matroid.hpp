#pragma once

// Matroids given by explicit basis lists.

#include <troplin/subset.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace troplin {

/// A failing instance of the basis-exchange axiom: no b ∈ B∖A makes A−a∪b a basis.
struct ExchangeFailure {
    Subset a_basis;
    Subset b_basis;
    int element = 0;

    std::string str() const {
        return "exchange fails for A=" + a_basis.compact() + ", B=" + b_basis.compact() + ", a=" + std::to_string(element);
    }
};

class ExchangeViolation : public InvalidArgument {
public:
    explicit ExchangeViolation(ExchangeFailure failure)
        : InvalidArgument(failure.str()), failure_(failure) {}

    const ExchangeFailure& failure() const noexcept { return failure_; }

private:
    ExchangeFailure failure_;
};

/// Checks the exchange axiom on a sorted, duplicate-free family of equicardinal subsets of [n].
inline std::optional<ExchangeFailure> find_exchange_violation(int n, const std::vector<Subset>& family) {
    std::vector<bool> member(std::size_t{1} << n, false);
    for (Subset s : family) member[s.bits()] = true;
    for (Subset a : family) {
        for (Subset b : family) {
            for (int x : (a - b).elements()) {
                bool found = false;
                for (int y : (b - a).elements()) {
                    if (member[a.without(x).with(y).bits()]) {
                        found = true;
                        break;
                    }
                }
                if (!found) return ExchangeFailure{a, b, x};
            }
        }
    }
    return std::nullopt;
}

class Matroid {
public:
    /// Validates and canonicalizes (sorts, dedups) a basis family.
    /// Throws InvalidArgument for an empty family, mixed sizes or elements outside [n],
    /// and ExchangeViolation when the exchange axiom fails.
    static Matroid from_bases(int n, std::vector<Subset> candidates) {
        if (n < 0 || n > kMaxGroundSet) throw InvalidArgument("matroid ground set size out of range");
        if (candidates.empty()) throw InvalidArgument("matroid needs at least one basis");
        const Subset ground = Subset::full(n);
        const int rank = candidates.front().size();
        for (Subset s : candidates) {
            if (!ground.contains(s)) throw InvalidArgument("basis " + s.str() + " is not a subset of [n]");
            if (s.size() != rank) throw InvalidArgument("bases of mixed cardinalities");
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (auto failure = find_exchange_violation(n, candidates)) throw ExchangeViolation(*failure);
        return Matroid(n, rank, std::move(candidates));
    }

    static Matroid uniform(int m, int n) { return Matroid(n, m, k_subsets(n, m)); }

    int ground_size() const noexcept { return n_; }
    int rank() const noexcept { return rank_; }
    const std::vector<Subset>& bases() const noexcept { return bases_; }

    bool is_basis(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

    /// Elements lying in at least one basis.
    Subset covered() const {
        Subset u;
        for (Subset b : bases_) u = u | b;
        return u;
    }

    friend bool operator==(const Matroid&, const Matroid&) = default;
    friend std::strong_ordering operator<=>(const Matroid& a, const Matroid& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bases_ <=> b.bases_;
    }

    /// "{13,14,23,24}"
    std::string str() const {
        std::string out = "{";
        for (std::size_t k = 0; k < bases_.size(); ++k) {
            if (k != 0) out += ",";
            out += bases_[k].compact();
        }
        return out + "}";
    }

private:
    Matroid(int n, int rank, std::vector<Subset> bases) : n_(n), rank_(rank), bases_(std::move(bases)) {}

    int n_;
    int rank_;
    std::vector<Subset> bases_;
};

/// Elements of [n] contained in no basis.
inline Subset loops(const Matroid& m) { return Subset::full(m.ground_size()) - m.covered(); }

/// |A∖B| = 1 for equicardinal A, B.
inline bool is_adjacent(Subset a, Subset b) {
    if (a.size() != b.size()) throw InvalidArgument("is_adjacent: subsets of different sizes");
    return (a - b).size() == 1;
}

/// The unique circuit of M inside B ∪ e: {e} ∪ {b ∈ B : B−b∪e is a basis}.
inline Subset fundamental_circuit_support(const Matroid& m, int e, Subset basis) {
    if (!m.is_basis(basis)) throw InvalidArgument("fundamental circuit: " + basis.str() + " is not a basis");
    if (e < 1 || e > m.ground_size()) throw InvalidArgument("fundamental circuit: element out of range");
    if (basis.contains(e)) throw InvalidArgument("fundamental circuit: element lies in the basis");
    Subset out = Subset{e};
    for (int b : basis.elements()) {
        if (m.is_basis(basis.without(b).with(e))) out = out.with(b);
    }
    return out;
}

namespace detail {

// Kuhn's augmenting path search. Rows are the elements of A, columns the elements of B.
inline bool augment_row(int row, const std::vector<Subset>& adjacency, std::vector<int>& column_owner,
                        std::uint32_t& visited) {
    for (int col : adjacency[static_cast<std::size_t>(row)].elements()) {
        const std::uint32_t bit = std::uint32_t{1} << (col - 1);
        if (visited & bit) continue;
        visited |= bit;
        int& owner = column_owner[static_cast<std::size_t>(col)];
        if (owner < 0 || augment_row(owner, adjacency, column_owner, visited)) {
            owner = row;
            return true;
        }
    }
    return false;
}

inline bool has_perfect_matching(const std::vector<Subset>& adjacency, int n) {
    std::vector<int> column_owner(static_cast<std::size_t>(n) + 1, -1);
    for (int row = 0; row < static_cast<int>(adjacency.size()); ++row) {
        std::uint32_t visited = 0;
        if (!augment_row(row, adjacency, column_owner, visited)) return false;
    }
    return true;
}

}  // namespace detail

/// Principal transversal matroid of the bipartite graph with edges b–b for b ∈ B and
/// j–i for i ∈ I_j (j ∉ B). An m-subset A is a basis iff its elements can be matched
/// to distinct elements of B. Elements j ∉ B missing from `families` have I_j = ∅.
inline Matroid transversal(int n, Subset basis, const std::map<int, Subset>& families) {
    if (!Subset::full(n).contains(basis)) throw InvalidArgument("transversal: B is not a subset of [n]");
    for (const auto& [j, family] : families) {
        if (j < 1 || j > n || basis.contains(j)) {
            throw InvalidArgument("transversal: family key " + std::to_string(j) + " is not in [n]∖B");
        }
        if (!basis.contains(family)) {
            throw InvalidArgument("transversal: I_" + std::to_string(j) + " is not a subset of B");
        }
    }
    std::vector<Subset> bases;
    for (Subset a : k_subsets(n, basis.size())) {
        std::vector<Subset> adjacency;
        for (int e : a.elements()) {
            if (basis.contains(e)) {
                adjacency.push_back(Subset{e});
            } else {
                auto it = families.find(e);
                adjacency.push_back(it == families.end() ? Subset{} : it->second);
            }
        }
        if (detail::has_perfect_matching(adjacency, n)) bases.push_back(a);
    }
    return Matroid::from_bases(n, std::move(bases));
}

}  // namespace troplin
