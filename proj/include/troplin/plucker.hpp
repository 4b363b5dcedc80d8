#pragma once

// Tropical Plücker vectors (valuated matroids): validation, valuated circuits,
// v-weights, face matroids M_v and membership in the tropical linear space L(p).

#include <troplin/matroid.hpp>
#include <troplin/tropical.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace troplin {

namespace detail {

inline std::uint64_t small_binomial(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 33>, 33> t{};
        for (int a = 0; a <= 32; ++a) {
            t[a][0] = 1;
            for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
        }
        return t;
    }();
    if (n < 0 || k < 0 || k > n) return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace detail

/// One failing three-term (or longer) Plücker relation: the minimum over
/// i ∈ T∖S of p_{S∪i} + p_{T−i} is attained only once.
struct RelationFailure {
    Subset s;
    Subset t;
    std::vector<std::pair<int, TropicalScalar>> terms;

    std::string str() const {
        std::string out = "S=" + s.str() + " T=" + t.str() + ": min(";
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (k != 0) out += ", ";
            out += terms[k].second.str();
        }
        return out + ") attained once";
    }
};

struct ValidationReport {
    std::vector<RelationFailure> failures;
    bool support_nonempty = true;
    std::optional<ExchangeFailure> exchange_failure;

    bool valid() const { return failures.empty() && support_nonempty && !exchange_failure; }
};

class PlueckerVector;
ValidationReport validate(const PlueckerVector& p);

/// A point of T^{([n] choose m)}. Entries default to ∞. Only vectors produced by
/// `PlueckerVector::validated` carry the validated flag that downstream operations require.
class PlueckerVector {
public:
    PlueckerVector(int n, int m) : n_(n), m_(m) {
        if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("Plücker vector: n out of range");
        if (m < 1 || m > n) throw InvalidArgument("Plücker vector: need 1 <= m <= n");
        entries_.resize(detail::small_binomial(n, m));
    }

    static PlueckerVector constant(int n, int m, const TropicalScalar& value) {
        PlueckerVector p(n, m);
        for (auto& x : p.entries_) x = value;
        return p;
    }

    /// Checks every Plücker relation; throws InvalidArgument describing the first failure.
    static PlueckerVector validated(PlueckerVector p) {
        const ValidationReport report = validate(p);
        if (!report.support_nonempty) throw InvalidArgument("Plücker vector has empty support");
        if (!report.failures.empty()) {
            throw InvalidArgument("not a tropical Plücker vector: " + report.failures.front().str());
        }
        if (report.exchange_failure) {
            throw InvalidArgument("support is not a matroid: " + report.exchange_failure->str());
        }
        p.validated_ = true;
        return p;
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    bool is_validated() const noexcept { return validated_; }

    const TropicalScalar& operator[](Subset s) const { return entries_[index(s)]; }

    void set(Subset s, TropicalScalar value) {
        entries_[index(s)] = std::move(value);
        validated_ = false;
    }

    /// supp(p) in lexicographic order.
    std::vector<Subset> support() const {
        std::vector<Subset> out;
        for (Subset s : k_subsets(n_, m_)) {
            if ((*this)[s].is_finite()) out.push_back(s);
        }
        return out;
    }

    bool in_support(Subset s) const {
        return s.size() == m_ && Subset::full(n_).contains(s) && (*this)[s].is_finite();
    }

    /// Equality of the underlying vectors; the validated flag is ignored.
    friend bool operator==(const PlueckerVector& a, const PlueckerVector& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(Subset s) const {
        if (s.size() != m_ || !Subset::full(n_).contains(s)) {
            throw InvalidArgument("Plücker coordinate " + s.str() + " is not an m-subset of [n]");
        }
        std::size_t idx = 0;
        int k = 1;
        for (int e : s.elements()) idx += detail::small_binomial(e - 1, k++);
        return idx;
    }

    int n_;
    int m_;
    std::vector<TropicalScalar> entries_;
    bool validated_ = false;
};

inline ValidationReport validate(const PlueckerVector& p) {
    ValidationReport report;
    const int n = p.n();
    const int m = p.m();
    const auto support = p.support();
    report.support_nonempty = !support.empty();
    for (Subset s : k_subsets(n, m - 1)) {
        for (Subset t : k_subsets(n, m + 1)) {
            const Subset free = t - s;
            std::vector<TropicalScalar> values;
            std::vector<std::pair<int, TropicalScalar>> terms;
            bool any_finite = false;
            for (int i : free.elements()) {
                auto term = t_plus(p[s.with(i)], p[t.without(i)]);
                any_finite = any_finite || term.is_finite();
                values.push_back(term);
                terms.emplace_back(i, std::move(term));
            }
            if (!any_finite) continue;
            if (!min_achieved_twice(values)) report.failures.push_back({s, t, std::move(terms)});
        }
    }
    if (report.support_nonempty) report.exchange_failure = find_exchange_violation(n, support);
    return report;
}

namespace detail {

inline void require_validated(const PlueckerVector& p, const char* op) {
    if (!p.is_validated()) throw InvalidArgument(std::string(op) + ": Plücker vector has not been validated");
}

inline void require_length(const PlueckerVector& p, std::size_t size, const char* op) {
    if (size != static_cast<std::size_t>(p.n())) {
        throw InvalidArgument(std::string(op) + ": vector length does not match n");
    }
}

}  // namespace detail

/// The matroid whose bases are supp(p).
inline Matroid underlying_matroid(const PlueckerVector& p) {
    detail::require_validated(p, "underlying_matroid");
    try {
        return Matroid::from_bases(p.n(), p.support());
    } catch (const ExchangeViolation& ex) {
        throw InternalError(std::string("validated Plücker vector with non-matroid support: ") + ex.what());
    }
}

/// c_S + λ·1 for some λ; the generator S records which (m+1)-set produced it.
struct ValuatedCircuit {
    TropicalVector vector;
    Subset generator;

    Subset support() const { return Subset::from_bits(vector.support_bits()); }
};

/// (c_S)_i = p_{S−i} for i ∈ S, ∞ otherwise. Empty iff c_S is the all-∞ vector.
inline std::optional<ValuatedCircuit> circuit(const PlueckerVector& p, Subset s) {
    detail::require_validated(p, "circuit");
    if (s.size() != p.m() + 1 || !Subset::full(p.n()).contains(s)) {
        throw InvalidArgument("circuit: generator must be an (m+1)-subset of [n]");
    }
    TropicalVector c(static_cast<std::size_t>(p.n()));
    for (int i : s.elements()) c[static_cast<std::size_t>(i - 1)] = p[s.without(i)];
    if (c.is_all_infinite()) return std::nullopt;
    return ValuatedCircuit{std::move(c), s};
}

namespace detail {

inline TropicalVector normalize_min_zero(const TropicalVector& c) {
    std::optional<Rational> low;
    for (const auto& x : c) {
        if (x.is_finite() && (!low || x.value() < *low)) low = x.value();
    }
    return low ? c.shifted(-*low) : c;
}

}  // namespace detail

/// One representative per circuit support, normalized to minimum entry 0 and
/// sorted by support.
inline std::vector<ValuatedCircuit> all_circuits(const PlueckerVector& p) {
    detail::require_validated(p, "all_circuits");
    std::map<Subset, ValuatedCircuit> by_support;
    for (Subset s : k_subsets(p.n(), p.m() + 1)) {
        auto c = circuit(p, s);
        if (!c) continue;
        c->vector = detail::normalize_min_zero(c->vector);
        auto [it, inserted] = by_support.try_emplace(c->support(), *c);
        if (!inserted && it->second.vector != c->vector) {
            throw InternalError("circuits " + it->second.generator.str() + " and " + s.str() +
                                " share a support but differ by more than a shift");
        }
    }
    std::vector<ValuatedCircuit> out;
    out.reserve(by_support.size());
    for (auto& [support, c] : by_support) out.push_back(std::move(c));
    return out;
}

/// The valuated circuit c_{B∪e}, whose support is the fundamental circuit C(e, B).
inline ValuatedCircuit fundamental_circuit(const PlueckerVector& p, int e, Subset basis) {
    detail::require_validated(p, "fundamental_circuit");
    if (!p.in_support(basis)) throw InvalidArgument("fundamental_circuit: " + basis.str() + " is not in supp(p)");
    if (e < 1 || e > p.n() || basis.contains(e)) {
        throw InvalidArgument("fundamental_circuit: element must lie in [n] outside the basis");
    }
    auto c = circuit(p, basis.with(e));
    if (!c) throw InternalError("fundamental circuit is all infinite");
#if TROPLIN_SELF_CHECKS
    if (c->support() != fundamental_circuit_support(underlying_matroid(p), e, basis)) {
        throw InternalError("valuated fundamental circuit support disagrees with the matroid");
    }
#endif
    return *c;
}

/// w_p(v, B) = −p_B + Σ_{i∈B} v_i.
inline Rational weight(const PlueckerVector& p, const Point& v, Subset basis) {
    detail::require_length(p, v.size(), "weight");
    if (!p.in_support(basis)) throw InvalidArgument("weight: " + basis.str() + " is not in supp(p) (weight is -inf)");
    Rational w = -p[basis].value();
    for (int i : basis.elements()) w += v[static_cast<std::size_t>(i - 1)];
    return w;
}

/// M_v: the bases of maximal v-weight.
inline Matroid matroid_at(const PlueckerVector& p, const Point& v) {
    detail::require_validated(p, "matroid_at");
    detail::require_length(p, v.size(), "matroid_at");
    std::vector<Subset> best;
    std::optional<Rational> best_weight;
    for (Subset b : p.support()) {
        Rational w = weight(p, v, b);
        if (!best_weight || *best_weight < w) {
            best_weight = std::move(w);
            best.assign(1, b);
        } else if (w == *best_weight) {
            best.push_back(b);
        }
    }
    try {
        return Matroid::from_bases(p.n(), std::move(best));
    } catch (const ExchangeViolation& ex) {
        throw InternalError(std::string("maximal-weight bases do not form a matroid: ") + ex.what());
    }
}

/// Membership in L(p) by tropical orthogonality to a precomputed circuit list.
inline bool contains_by_circuits(const std::vector<ValuatedCircuit>& circuits, const Point& v) {
    const TropicalVector tv = TropicalVector::from_point(v);
    for (const auto& c : circuits) {
        if (!is_orthogonal(tv, c.vector)) return false;
    }
    return true;
}

inline bool contains_by_circuits(const PlueckerVector& p, const Point& v) {
    detail::require_length(p, v.size(), "contains");
    return contains_by_circuits(all_circuits(p), v);
}

/// Membership in L(p) by looplessness of M_v.
inline bool contains_by_loopless(const PlueckerVector& p, const Point& v) {
    return loops(matroid_at(p, v)).empty();
}

/// v ∈ L(p). With self-checks enabled both routes run and must agree.
inline bool contains(const PlueckerVector& p, const Point& v) {
    const bool loopless = contains_by_loopless(p, v);
#if TROPLIN_SELF_CHECKS
    if (contains_by_circuits(p, v) != loopless) {
        throw InternalError("membership routes disagree at " + format_point(v));
    }
#endif
    return loopless;
}

/// True iff `x` is c + λ·1 for some circuit c of p.
inline bool is_circuit_of(const PlueckerVector& p, const TropicalVector& x) {
    detail::require_length(p, x.size(), "is_circuit_of");
    const Subset support = Subset::from_bits(x.support_bits());
    for (const auto& c : all_circuits(p)) {
        if (c.support() != support) continue;
        const int first = support.min_element() - 1;
        const Rational lambda = x[static_cast<std::size_t>(first)].value() - c.vector[static_cast<std::size_t>(first)].value();
        return c.vector.shifted(lambda) == x;
    }
    return false;
}

/// Valuated circuit elimination: given circuits d, e with d_a < e_a and d_b = e_b ≠ ∞,
/// returns a circuit f with f_b = ∞, f_a = d_a and f ≥ min(d, e).
inline TropicalVector eliminate(const PlueckerVector& p, const TropicalVector& d, const TropicalVector& e, int a,
                                int b) {
    detail::require_validated(p, "eliminate");
    if (a < 1 || a > p.n() || b < 1 || b > p.n()) throw InvalidArgument("eliminate: element out of range");
    if (!is_circuit_of(p, d) || !is_circuit_of(p, e)) throw InvalidArgument("eliminate: arguments must be circuits of p");
    const auto ia = static_cast<std::size_t>(a - 1);
    const auto ib = static_cast<std::size_t>(b - 1);
    if (!(d[ia] < e[ia])) throw InvalidArgument("eliminate: requires d_a < e_a");
    if (d[ib].is_infinite() || d[ib] != e[ib]) throw InvalidArgument("eliminate: requires d_b = e_b finite");

    for (const auto& c : all_circuits(p)) {
        if (c.vector[ib].is_finite() || c.vector[ia].is_infinite()) continue;
        TropicalVector f = c.vector.shifted(d[ia].value() - c.vector[ia].value());
        bool dominates = true;
        for (std::size_t k = 0; k < f.size() && dominates; ++k) dominates = !(f[k] < t_min(d[k], e[k]));
        if (dominates) return f;
    }
    throw InternalError("eliminate: no circuit satisfies the elimination conditions");
}

}  // namespace troplin
