#pragma once

// Local tropical linear spaces L(p)_B = L(p) ∩ Σ_B, their piecewise linear chart
// R^m → L(p)_B, and the tropical projection onto L(p).

#include <troplin/plucker.hpp>

#include <optional>
#include <vector>

namespace troplin {

/// One candidate x_coord + offset in the chart's minimum for an element i ∉ B,
/// where coord indexes b_coord ∈ C(i,B) − i and offset = p_{B∪i−b} − p_B.
struct ChartTerm {
    int coord;
    Rational offset;
};

/// A validated Plücker vector together with a basis B of its (loopless) underlying
/// matroid. Chart coordinates follow the increasing order of B.
class LocalContext {
public:
    LocalContext(PlueckerVector p, Subset basis) : p_(std::move(p)), basis_(basis) {
        detail::require_validated(p_, "LocalContext");
        if (!p_.in_support(basis_)) throw InvalidArgument("LocalContext: " + basis_.str() + " is not in supp(p)");
        const Matroid matroid = underlying_matroid(p_);
        if (const Subset l = loops(matroid); !l.empty()) {
            throw InvalidArgument("LocalContext: underlying matroid has loops " + l.str() +
                                  "; L(p) has no finite points");
        }
        basis_elements_ = basis_.elements();
        terms_.resize(static_cast<std::size_t>(p_.n()));
        circuits_.resize(static_cast<std::size_t>(p_.n()));
        const Rational& pb = p_[basis_].value();
        for (int i = 1; i <= p_.n(); ++i) {
            if (basis_.contains(i)) continue;
            const Subset c = fundamental_circuit_support(matroid, i, basis_);
            circuits_[static_cast<std::size_t>(i - 1)] = c;
            auto& row = terms_[static_cast<std::size_t>(i - 1)];
            for (int j = 0; j < static_cast<int>(basis_elements_.size()); ++j) {
                const int b = basis_elements_[static_cast<std::size_t>(j)];
                if (!c.contains(b)) continue;
                row.push_back({j, p_[basis_.without(b).with(i)].value() - pb});
            }
        }
    }

    const PlueckerVector& plucker() const noexcept { return p_; }
    Subset basis() const noexcept { return basis_; }
    int n() const noexcept { return p_.n(); }
    int m() const noexcept { return p_.m(); }

    /// b_1 < ... < b_m
    const std::vector<int>& basis_elements() const noexcept { return basis_elements_; }

    /// Elements of [n]∖B in increasing order.
    std::vector<int> outside() const { return (Subset::full(p_.n()) - basis_).elements(); }

    /// Chart terms for an element i ∉ B, one per b ∈ C(i,B) − i.
    const std::vector<ChartTerm>& terms(int i) const { return terms_.at(static_cast<std::size_t>(i - 1)); }

    /// C(i, B) for i ∉ B.
    Subset fundamental_circuit(int i) const { return circuits_.at(static_cast<std::size_t>(i - 1)); }

private:
    PlueckerVector p_;
    Subset basis_;
    std::vector<int> basis_elements_;
    std::vector<std::vector<ChartTerm>> terms_;
    std::vector<Subset> circuits_;
};

/// v ∈ Σ_B, i.e. B has maximal v-weight.
inline bool in_sigma(const LocalContext& ctx, const Point& v) {
    const auto& p = ctx.plucker();
    detail::require_length(p, v.size(), "in_sigma");
    const Rational wb = weight(p, v, ctx.basis());
    for (Subset a : p.support()) {
        if (wb < weight(p, v, a)) return false;
    }
    return true;
}

/// For v ∈ Σ_B: v ∈ L(p)_B iff v is orthogonal to every fundamental circuit over B.
inline bool in_local_space(const LocalContext& ctx, const Point& v) {
    const auto& p = ctx.plucker();
    if (!in_sigma(ctx, v)) throw InvalidArgument("in_local_space: point is not in Sigma_B");
    const TropicalVector tv = TropicalVector::from_point(v);
    bool inside = true;
    for (int i : ctx.outside()) {
        if (!is_orthogonal(tv, fundamental_circuit(p, i, ctx.basis()).vector)) {
            inside = false;
            break;
        }
    }
#if TROPLIN_SELF_CHECKS
    if (inside != contains(p, v)) throw InternalError("local membership disagrees with global membership");
#endif
    return inside;
}

/// f_B(x): v_{b_j} = x_j, and v_i = min_{b_j ∈ C(i,B)−i} x_j + p_{B∪i−b_j} − p_B for i ∉ B.
inline Point chart(const LocalContext& ctx, const Point& x) {
    if (x.size() != static_cast<std::size_t>(ctx.m())) throw InvalidArgument("chart: x must have length m");
    Point v(static_cast<std::size_t>(ctx.n()));
    const auto& bs = ctx.basis_elements();
    for (std::size_t j = 0; j < bs.size(); ++j) v[static_cast<std::size_t>(bs[j] - 1)] = x[j];
    for (int i : ctx.outside()) {
        const auto& row = ctx.terms(i);
        Rational best = x[static_cast<std::size_t>(row.front().coord)] + row.front().offset;
        for (std::size_t k = 1; k < row.size(); ++k) {
            Rational t = x[static_cast<std::size_t>(row[k].coord)] + row[k].offset;
            if (t < best) best = std::move(t);
        }
        v[static_cast<std::size_t>(i - 1)] = std::move(best);
    }
#if TROPLIN_SELF_CHECKS
    if (!in_sigma(ctx, v) || !in_local_space(ctx, v)) throw InternalError("chart image left L(p)_B");
#endif
    return v;
}

/// Inverse of the chart on L(p)_B: restriction to the coordinates of B.
inline Point chart_inverse(const LocalContext& ctx, const Point& v) {
    if (!in_local_space(ctx, v)) throw InvalidArgument("chart_inverse: point is not in L(p)_B");
    Point x;
    x.reserve(static_cast<std::size_t>(ctx.m()));
    for (int b : ctx.basis_elements()) x.push_back(v[static_cast<std::size_t>(b - 1)]);
    return x;
}

/// Tropical projection π(y) of y ∈ Σ_B onto L(p).
inline Point project(const LocalContext& ctx, const Point& y) {
    const auto& p = ctx.plucker();
    if (!in_sigma(ctx, y)) throw InvalidArgument("project: point is not in Sigma_B");
    const Subset basis = ctx.basis();
    const Rational& pb = p[basis].value();
    Point out = y;
    for (int i : ctx.outside()) {
        std::optional<Rational> best;
        for (int j : basis.elements()) {
            const auto& q = p[basis.without(j).with(i)];
            if (q.is_infinite()) continue;
            Rational t = y[static_cast<std::size_t>(j - 1)] + q.value() - pb;
            if (!best || t < *best) best = std::move(t);
        }
        out[static_cast<std::size_t>(i - 1)] = *best;
    }
    return out;
}

/// The lexicographically least basis of M_y.
inline Subset projection_basis(const PlueckerVector& p, const Point& y) { return matroid_at(p, y).bases().front(); }

/// Projects an arbitrary finite y, using the lexicographically least basis of M_y.
inline Point project_any(const PlueckerVector& p, const Point& y) {
    return project(LocalContext(p, projection_basis(p, y)), y);
}

}  // namespace troplin
