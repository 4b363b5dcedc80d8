#pragma once

// Cell enumeration for L(p) ∩ R^n.
//
// Inside one local space L(p)_B the chart f_B is linear on each region of R^m where
// the argmin sets of its n−m minima are fixed. A TiePattern fixes those argmin sets;
// its region is a system of difference constraints in the chart coordinates. Each
// feasible region maps onto a relatively open cell whose face matroid M_v is the
// cell's identity. The global complex is the union of the local ones.

#include <troplin/chart.hpp>
#include <troplin/counting.hpp>
#include <troplin/difference.hpp>

#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

namespace troplin {

/// For each i ∉ B (in increasing order) the asserted argmin set S_i ⊆ C(i,B) − i.
struct TiePattern {
    std::vector<Subset> argmin;
};

struct Region {
    bool feasible = false;
    int dim = 0;
    bool bounded = false;
    Point witness_x;
    DifferenceSystem system{0};
    std::optional<InfeasibilityCertificate> certificate;
};

/// One relatively open face of L(p) ∩ R^n. `dim` counts the lineality direction R·1.
struct Cell {
    Matroid face;
    int dim = 0;
    bool bounded = false;
    Point witness;
    std::vector<Subset> owners;
};

struct EnumerationLimits {
    int max_n = 10;
    std::uint64_t max_patterns = 50'000'000;
    unsigned threads = 1;
};

struct EnumerationStats {
    std::uint64_t patterns_visited = 0;
    std::uint64_t feasible_patterns = 0;
    /// Distinct feasible tie patterns that landed on an already-seen face matroid.
    std::uint64_t refinements = 0;

    EnumerationStats& operator+=(const EnumerationStats& other) {
        patterns_visited += other.patterns_visited;
        feasible_patterns += other.feasible_patterns;
        refinements += other.refinements;
        return *this;
    }
};

namespace detail {

// Adds the constraints asserting that, among the chart terms of one element, exactly
// the terms selected by `mask` attain the minimum.
inline void add_argmin_constraints(DifferenceSystem& sys, const std::vector<ChartTerm>& terms, std::uint32_t mask) {
    int rep = -1;
    for (int k = 0; k < static_cast<int>(terms.size()); ++k) {
        if ((mask >> k) & 1U) {
            rep = k;
            break;
        }
    }
    const auto& r = terms[static_cast<std::size_t>(rep)];
    for (int k = 0; k < static_cast<int>(terms.size()); ++k) {
        if (k == rep) continue;
        const auto& t = terms[static_cast<std::size_t>(k)];
        if ((mask >> k) & 1U) {
            sys.add_eq(r.coord, t.coord, t.offset - r.offset);
        } else {
            sys.add_lt(r.coord, t.coord, t.offset - r.offset);
        }
    }
}

inline std::uint32_t pattern_mask(const LocalContext& ctx, int element, Subset argmin) {
    const auto& terms = ctx.terms(element);
    const auto& bs = ctx.basis_elements();
    std::uint32_t mask = 0;
    for (int k = 0; k < static_cast<int>(terms.size()); ++k) {
        if (argmin.contains(bs[static_cast<std::size_t>(terms[static_cast<std::size_t>(k)].coord)])) {
            mask |= std::uint32_t{1} << k;
        }
    }
    return mask;
}

inline Point shift_min_to_zero(Point x) {
    if (x.empty()) return x;
    Rational low = *std::min_element(x.begin(), x.end());
    for (auto& c : x) c -= low;
    return x;
}

inline Subset realized_argmin(const LocalContext& ctx, int element, const Point& x) {
    const auto& terms = ctx.terms(element);
    const auto& bs = ctx.basis_elements();
    std::optional<Rational> best;
    Subset out;
    for (const auto& t : terms) {
        Rational value = x[static_cast<std::size_t>(t.coord)] + t.offset;
        const int b = bs[static_cast<std::size_t>(t.coord)];
        if (!best || value < *best) {
            best = std::move(value);
            out = Subset{b};
        } else if (value == *best) {
            out = out.with(b);
        }
    }
    return out;
}

}  // namespace detail

/// Builds the difference system of a tie pattern over the chart coordinates.
inline DifferenceSystem pattern_system(const LocalContext& ctx, const TiePattern& pattern) {
    const auto outside = ctx.outside();
    if (pattern.argmin.size() != outside.size()) throw InvalidArgument("tie pattern: one argmin set per element outside B");
    DifferenceSystem sys(ctx.m());
    for (std::size_t k = 0; k < outside.size(); ++k) {
        const int i = outside[k];
        const Subset candidates = ctx.fundamental_circuit(i).without(i);
        const Subset s = pattern.argmin[k];
        if (s.empty() || !candidates.contains(s)) {
            throw InvalidArgument("tie pattern: S_" + std::to_string(i) + " must be a nonempty subset of C(i,B)-i");
        }
        detail::add_argmin_constraints(sys, ctx.terms(i), detail::pattern_mask(ctx, i, s));
    }
    return sys;
}

/// The region of chart coordinates realizing `pattern`: feasibility, dimension
/// (components of the equality graph), boundedness modulo R·1 and a witness
/// shifted so that its least coordinate is 0.
inline Region region_of(const LocalContext& ctx, const TiePattern& pattern) {
    Region region;
    region.system = pattern_system(ctx, pattern);
    SolveResult solved = solve(region.system);
    if (!solved.feasible()) {
        region.certificate = std::move(solved.certificate);
        return region;
    }
    region.feasible = true;
    region.dim = equality_components(region.system);
    region.bounded = is_bounded(region.system);
    region.witness_x = detail::shift_min_to_zero(std::move(*solved.witness));
    return region;
}

/// Argmin sets the chart realizes at x, one per element outside B.
inline TiePattern realized_pattern(const LocalContext& ctx, const Point& x) {
    TiePattern t;
    for (int i : ctx.outside()) t.argmin.push_back(detail::realized_argmin(ctx, i, x));
    return t;
}

namespace detail {

struct LocalSearch {
    const LocalContext& ctx;
    const EnumerationLimits& limits;
    std::vector<int> outside;
    std::map<Matroid, Cell> cells;
    EnumerationStats stats;
    std::vector<std::uint32_t> masks;

    void run(std::size_t level, const DifferenceSystem& sys, std::optional<Point> witness) {
        if (level == outside.size()) {
            if (!witness) {
                auto solved = solve(sys);
                if (!solved.feasible()) return;
                witness = std::move(solved.witness);
            }
            emit(sys, *witness);
            return;
        }
        const auto& terms = ctx.terms(outside[level]);
        const std::uint32_t full = (std::uint32_t{1} << terms.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (++stats.patterns_visited > limits.max_patterns) {
                throw LimitExceeded("tie-pattern enumeration exceeded " + std::to_string(limits.max_patterns) +
                                    " patterns");
            }
            DifferenceSystem next = sys;
            add_argmin_constraints(next, terms, mask);
            auto solved = solve(next);
            if (!solved.feasible()) continue;
            masks[level] = mask;
            run(level + 1, next, std::move(solved.witness));
        }
    }

    void emit(const DifferenceSystem& sys, const Point& raw_witness) {
        ++stats.feasible_patterns;
        const Point x = shift_min_to_zero(raw_witness);
        const Point v = shift_min_to_zero(chart(ctx, x));
#if TROPLIN_SELF_CHECKS
        for (std::size_t k = 0; k < outside.size(); ++k) {
            const std::uint32_t got = pattern_mask(ctx, outside[k], realized_argmin(ctx, outside[k], x));
            if (got != masks[k]) throw InternalError("witness does not realize its tie pattern");
        }
#endif
        Matroid face = matroid_at(ctx.plucker(), v);
        if (!face.is_basis(ctx.basis()) || !loops(face).empty()) {
            throw InternalError("local cell " + face.str() + " misses the basis or has loops");
        }
        const int dim = equality_components(sys);
        const bool bounded = is_bounded(sys);
        auto it = cells.find(face);
        if (it != cells.end()) {
            ++stats.refinements;
            if (it->second.dim != dim || it->second.bounded != bounded) {
                throw InternalError("tie patterns with face " + face.str() + " disagree on dimension or boundedness");
            }
            return;
        }
        Cell cell{face, dim, bounded, v, {ctx.basis()}};
        cells.emplace(std::move(face), std::move(cell));
    }
};

inline void check_size(int n, const EnumerationLimits& limits) {
    if (n > limits.max_n) {
        throw LimitExceeded("cell enumeration limited to n <= " + std::to_string(limits.max_n));
    }
}

}  // namespace detail

/// Cells of L(p)_B, sorted by face matroid.
inline std::vector<Cell> enumerate_local_cells(const LocalContext& ctx, const EnumerationLimits& limits = {},
                                               EnumerationStats* stats = nullptr) {
    detail::check_size(ctx.n(), limits);
    detail::LocalSearch search{ctx, limits, ctx.outside(), {}, {}, {}};
    search.masks.assign(search.outside.size(), 0);
    search.run(0, DifferenceSystem(ctx.m()), std::nullopt);
    if (stats != nullptr) *stats += search.stats;
    std::vector<Cell> out;
    out.reserve(search.cells.size());
    for (auto& [face, cell] : search.cells) out.push_back(std::move(cell));
    return out;
}

/// Cells of L(p) ∩ R^n: the union over all bases B ∈ supp(p) of the local cells,
/// merged by face matroid with the contributing bases collected in `owners`.
/// Bases are split across `limits.threads` workers; the result does not depend on it.
inline std::vector<Cell> enumerate_cells(const PlueckerVector& p, const EnumerationLimits& limits = {},
                                         EnumerationStats* stats = nullptr) {
    detail::require_validated(p, "enumerate_cells");
    detail::check_size(p.n(), limits);
    const auto support = p.support();
    std::vector<std::vector<Cell>> per_basis(support.size());
    std::vector<EnumerationStats> per_stats(support.size());

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < support.size(); k += stride) {
            per_basis[k] = enumerate_local_cells(LocalContext(p, support[k]), limits, &per_stats[k]);
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(limits.threads, static_cast<unsigned>(support.size())));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    work(t, threads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    std::map<Matroid, Cell> merged;
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (stats != nullptr) *stats += per_stats[k];
        for (auto& cell : per_basis[k]) {
            auto it = merged.find(cell.face);
            if (it == merged.end()) {
                merged.emplace(cell.face, std::move(cell));
                continue;
            }
            if (it->second.dim != cell.dim || it->second.bounded != cell.bounded) {
                throw InternalError("local spaces disagree on cell " + cell.face.str());
            }
            it->second.owners.push_back(support[k]);
        }
    }
    std::vector<Cell> out;
    out.reserve(merged.size());
    for (auto& [face, cell] : merged) {
        std::sort(cell.owners.begin(), cell.owners.end());
#if TROPLIN_SELF_CHECKS
        if (cell.owners != cell.face.bases()) {
            throw InternalError("cell " + cell.face.str() + " was not found from every one of its bases");
        }
#endif
        out.push_back(std::move(cell));
    }
    return out;
}

struct FaceCounts {
    std::uint64_t total = 0;
    std::uint64_t bounded = 0;

    friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
};

/// Face counts per ambient dimension i = 1..rank.
class FVector {
public:
    FVector() = default;
    explicit FVector(int rank) : counts_(static_cast<std::size_t>(std::max(rank, 0))) {}

    int rank() const noexcept { return static_cast<int>(counts_.size()); }
    const FaceCounts& at(int i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }
    FaceCounts& at(int i) { return counts_.at(static_cast<std::size_t>(i - 1)); }

    std::vector<std::uint64_t> bounded() const {
        std::vector<std::uint64_t> out;
        for (const auto& c : counts_) out.push_back(c.bounded);
        return out;
    }
    std::vector<std::uint64_t> total() const {
        std::vector<std::uint64_t> out;
        for (const auto& c : counts_) out.push_back(c.total);
        return out;
    }

    friend bool operator==(const FVector&, const FVector&) = default;

private:
    std::vector<FaceCounts> counts_;
};

inline FVector f_vector(const std::vector<Cell>& cells, int rank) {
    FVector f(rank);
    for (const auto& c : cells) {
        if (c.dim < 1 || c.dim > rank) throw InvalidArgument("f_vector: cell dimension outside 1..m");
        auto& slot = f.at(c.dim);
        ++slot.total;
        if (c.bounded) ++slot.bounded;
    }
    return f;
}

struct FacetReport {
    std::uint64_t facets = 0;
    BigInt bound;

    bool within_bound() const { return BigInt(facets) <= bound; }
    bool tight() const { return BigInt(facets) == bound; }
};

/// Counts the maximal faces of the matroid subdivision (the cells of dimension 1)
/// against the C(n−2, m−1) facet bound. Requires support U_{m,n}.
inline FacetReport check_speyer_facet_bound(const PlueckerVector& p, const EnumerationLimits& limits = {}) {
    detail::require_validated(p, "check_speyer_facet_bound");
    if (p.support().size() != detail::small_binomial(p.n(), p.m())) {
        throw InvalidArgument("facet bound applies only to Plücker vectors with uniform support");
    }
    FacetReport report;
    for (const auto& c : enumerate_cells(p, limits)) {
        if (c.dim == 1) ++report.facets;
    }
    report.bound = binomial(p.n() - 2, p.m() - 1);
    return report;
}

/// DOT graph for m = 2: cells of dimension 1 as nodes v0, v1, ... and bounded cells
/// of dimension 2 as edges between the two nodes whose faces contain them.
inline std::string cell_adjacency_dot(const std::vector<Cell>& cells) {
    std::vector<const Cell*> nodes;
    for (const auto& c : cells) {
        if (c.dim == 1) nodes.push_back(&c);
    }
    std::ostringstream out;
    out << "graph cells {\n";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        out << "  v" << k << " [label=\"" << nodes[k]->face.str() << "\"];\n";
    }
    for (const auto& c : cells) {
        if (c.dim != 2 || !c.bounded) continue;
        std::vector<std::size_t> ends;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const auto& nb = nodes[k]->face.bases();
            bool contains_all = true;
            for (Subset b : c.face.bases()) contains_all = contains_all && std::binary_search(nb.begin(), nb.end(), b);
            if (contains_all) ends.push_back(k);
        }
        if (ends.size() == 2) out << "  v" << ends[0] << " -- v" << ends[1] << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace troplin
