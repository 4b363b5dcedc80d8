#pragma once

// JSON formats. Rationals are strings "a" or "a/b", infinity is "inf", subsets are
// increasing 1-based integer arrays.

#include <troplin/conical.hpp>

#include <json.hpp>

#include <set>
#include <string>

namespace troplin::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw FormatError(path.empty() ? "<root>" : path, "expected an object");
    auto it = obj.find(key);
    const std::string where = path.empty() ? std::string(key) : path + "." + key;
    if (it == obj.end()) throw FormatError(where, "missing field");
    return *it;
}

inline std::string join(const std::string& path, const char* key) { return path.empty() ? std::string(key) : path + "." + key; }

inline std::string index(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

inline int integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw FormatError(path, "expected an integer");
    return j.get<int>();
}

inline const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw FormatError(path, "expected an array");
    return j;
}

}  // namespace detail

inline Json to_json(const Rational& q) { return format_rational(q); }
inline Json to_json(const TropicalScalar& x) { return x.str(); }

inline Json to_json(Subset s) {
    Json out = Json::array();
    for (int e : s.elements()) out.push_back(e);
    return out;
}

inline Json to_json(const Point& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

inline Json to_json(const TropicalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline TropicalScalar scalar_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return TropicalScalar(j.get<long long>());
    if (!j.is_string()) throw FormatError(path, "expected a rational string or \"inf\"");
    try {
        return TropicalScalar::parse(j.get<std::string>());
    } catch (const InvalidArgument& ex) {
        throw FormatError(path, ex.what());
    }
}

inline Rational rational_from_json(const Json& j, const std::string& path) {
    const TropicalScalar x = scalar_from_json(j, path);
    if (x.is_infinite()) throw FormatError(path, "expected a finite rational");
    return x.value();
}

inline Point point_from_json(const Json& j, const std::string& path = "point") {
    Point out;
    const auto& arr = detail::array(j, path);
    for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(rational_from_json(arr[k], detail::index(path, k)));
    return out;
}

/// Increasing list of elements of [n].
inline Subset subset_from_json(const Json& j, const std::string& path, int n) {
    const auto& arr = detail::array(j, path);
    std::vector<int> elements;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const int e = detail::integer(arr[k], detail::index(path, k));
        if (e < 1 || e > n) throw FormatError(detail::index(path, k), "element outside 1.." + std::to_string(n));
        if (!elements.empty() && e <= elements.back()) throw FormatError(path, "elements must be strictly increasing");
        elements.push_back(e);
    }
    return Subset::from_elements(elements);
}

// ---------------------------------------------------------------------------
// Plücker vectors: {"n": 4, "m": 2, "entries": [{"subset": [1,2], "value": "1"}, ...]}

inline Json to_json(const PlueckerVector& p) {
    Json entries = Json::array();
    for (Subset s : p.support()) entries.push_back(Json{{"subset", to_json(s)}, {"value", to_json(p[s])}});
    return Json{{"n", p.n()}, {"m", p.m()}, {"entries", entries}};
}

/// Absent subsets are ∞; duplicates are rejected. The result is not validated.
inline PlueckerVector plucker_from_json(const Json& j) {
    const int n = detail::integer(detail::member(j, "n", ""), "n");
    const int m = detail::integer(detail::member(j, "m", ""), "m");
    if (n < 1 || n > kMaxGroundSet) throw FormatError("n", "must lie in 1.." + std::to_string(kMaxGroundSet));
    if (m < 1 || m > n) throw FormatError("m", "must lie in 1..n");
    PlueckerVector p(n, m);
    std::set<Subset> seen;
    const auto& entries = detail::array(detail::member(j, "entries", ""), "entries");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string path = detail::index("entries", k);
        const Subset s = subset_from_json(detail::member(entries[k], "subset", path), detail::join(path, "subset"), n);
        if (s.size() != m) throw FormatError(detail::join(path, "subset"), "must have exactly m elements");
        if (!seen.insert(s).second) throw FormatError(detail::join(path, "subset"), "duplicate subset " + s.str());
        p.set(s, scalar_from_json(detail::member(entries[k], "value", path), detail::join(path, "value")));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Matroids: {"n": 4, "bases": [[1,3], [1,4], ...]}

inline Json bases_json(const Matroid& m) {
    Json bases = Json::array();
    for (Subset b : m.bases()) bases.push_back(to_json(b));
    return bases;
}

inline Json to_json(const Matroid& m) { return Json{{"n", m.ground_size()}, {"bases", bases_json(m)}}; }

inline std::vector<Subset> subsets_from_json(const Json& j, const std::string& path, int n) {
    std::vector<Subset> out;
    const auto& arr = detail::array(j, path);
    for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(subset_from_json(arr[k], detail::index(path, k), n));
    return out;
}

inline Matroid matroid_from_json(const Json& j, const std::string& path = "") {
    const int n = detail::integer(detail::member(j, "n", path), detail::join(path, "n"));
    if (n < 0 || n > kMaxGroundSet) throw FormatError(detail::join(path, "n"), "out of range");
    const std::string bases_path = detail::join(path, "bases");
    try {
        return Matroid::from_bases(n, subsets_from_json(detail::member(j, "bases", path), bases_path, n));
    } catch (const FormatError&) {
        throw;
    } catch (const InvalidArgument& ex) {
        throw FormatError(bases_path, ex.what());
    }
}

// ---------------------------------------------------------------------------
// Circuits: {"circuits": [{"support": [1,2,3], "vector": ["0","0","1","inf"]}, ...]}

inline Json to_json(const std::vector<ValuatedCircuit>& circuits) {
    Json arr = Json::array();
    for (const auto& c : circuits) arr.push_back(Json{{"support", to_json(c.support())}, {"vector", to_json(c.vector)}});
    return Json{{"circuits", arr}};
}

inline std::vector<TropicalVector> circuits_from_json(const Json& j) {
    std::vector<TropicalVector> out;
    const auto& arr = detail::array(detail::member(j, "circuits", ""), "circuits");
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string path = detail::join(detail::index("circuits", k), "vector");
        const auto& vec = detail::array(detail::member(arr[k], "vector", detail::index("circuits", k)), path);
        TropicalVector v(vec.size());
        for (std::size_t e = 0; e < vec.size(); ++e) v[e] = scalar_from_json(vec[e], detail::index(path, e));
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cells: {"cells": [{"bases": [[...]], "dim": d, "bounded": b, "witness": [...], "owners": [[...]]}]}

inline Json to_json(const Cell& c) {
    Json owners = Json::array();
    for (Subset b : c.owners) owners.push_back(to_json(b));
    return Json{{"bases", bases_json(c.face)},
                {"dim", c.dim},
                {"bounded", c.bounded},
                {"witness", to_json(c.witness)},
                {"owners", owners}};
}

inline Json to_json(const std::vector<Cell>& cells) {
    Json arr = Json::array();
    for (const auto& c : cells) arr.push_back(to_json(c));
    return Json{{"cells", arr}};
}

inline std::vector<Cell> cells_from_json(const Json& j, int n) {
    std::vector<Cell> out;
    const auto& arr = detail::array(detail::member(j, "cells", ""), "cells");
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string path = detail::index("cells", k);
        const std::string bases_path = detail::join(path, "bases");
        std::vector<Subset> bases = subsets_from_json(detail::member(arr[k], "bases", path), bases_path, n);
        Cell cell{[&] {
            try {
                return Matroid::from_bases(n, bases);
            } catch (const InvalidArgument& ex) {
                throw FormatError(bases_path, ex.what());
            }
        }()};
        cell.dim = detail::integer(detail::member(arr[k], "dim", path), detail::join(path, "dim"));
        const auto& bounded = detail::member(arr[k], "bounded", path);
        if (!bounded.is_boolean()) throw FormatError(detail::join(path, "bounded"), "expected a boolean");
        cell.bounded = bounded.get<bool>();
        cell.witness = point_from_json(detail::member(arr[k], "witness", path), detail::join(path, "witness"));
        cell.owners = subsets_from_json(detail::member(arr[k], "owners", path), detail::join(path, "owners"), n);
        out.push_back(std::move(cell));
    }
    return out;
}

// ---------------------------------------------------------------------------
// F-vectors: {"fvector": {"1": {"total": t, "bounded": b}, ...}}

inline Json to_json(const FVector& f) {
    Json by_dim = Json::object();
    for (int i = 1; i <= f.rank(); ++i) {
        by_dim[std::to_string(i)] = Json{{"total", f.at(i).total}, {"bounded", f.at(i).bounded}};
    }
    return Json{{"fvector", by_dim}};
}

inline FVector fvector_from_json(const Json& j) {
    const auto& by_dim = detail::member(j, "fvector", "");
    if (!by_dim.is_object()) throw FormatError("fvector", "expected an object");
    const int rank = static_cast<int>(by_dim.size());
    FVector f(rank);
    for (int i = 1; i <= rank; ++i) {
        const std::string key = std::to_string(i);
        const std::string path = "fvector." + key;
        const auto& slot = detail::member(by_dim, key.c_str(), "fvector");
        auto read = [&](const char* name) {
            const auto& x = detail::member(slot, name, path);
            if (!x.is_number_unsigned()) throw FormatError(detail::join(path, name), "expected a non-negative integer");
            return x.get<std::uint64_t>();
        };
        f.at(i).total = read("total");
        f.at(i).bounded = read("bounded");
    }
    return f;
}

// ---------------------------------------------------------------------------
// Height matrices: {"n": 4, "B": [1,2], "V": [["0","1"], ["0","inf"]]}

inline Json to_json(const HeightMatrix& v) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < v.heights().rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < v.heights().cols(); ++c) row.push_back(to_json(v.heights()(r, c)));
        rows.push_back(row);
    }
    return Json{{"n", v.n()}, {"B", to_json(v.basis())}, {"V", rows}};
}

inline HeightMatrix heights_from_json(const Json& j) {
    const int n = detail::integer(detail::member(j, "n", ""), "n");
    if (n < 2 || n > kMaxGroundSet) throw FormatError("n", "out of range");
    const Subset basis = subset_from_json(detail::member(j, "B", ""), "B", n);
    const int m = basis.size();
    if (m < 1 || m >= n) throw FormatError("B", "must be a nonempty proper subset of [n]");
    const auto& rows = detail::array(detail::member(j, "V", ""), "V");
    if (rows.size() != static_cast<std::size_t>(m)) throw FormatError("V", "needs one row per element of B");
    TropicalMatrix v(static_cast<std::size_t>(m), static_cast<std::size_t>(n - m));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string path = detail::index("V", r);
        const auto& row = detail::array(rows[r], path);
        if (row.size() != static_cast<std::size_t>(n - m)) throw FormatError(path, "needs one entry per element outside B");
        for (std::size_t c = 0; c < row.size(); ++c) v(r, c) = scalar_from_json(row[c], detail::index(path, c));
    }
    return HeightMatrix(n, basis, std::move(v));
}

// ---------------------------------------------------------------------------

inline Json to_json(const ValidationReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json terms = Json::array();
        for (const auto& [i, value] : f.terms) terms.push_back(Json{{"i", i}, {"value", to_json(value)}});
        failures.push_back(Json{{"S", to_json(f.s)}, {"T", to_json(f.t)}, {"terms", terms}});
    }
    Json out{{"valid", report.valid()}, {"support_nonempty", report.support_nonempty}, {"failures", failures}};
    out["exchange_failure"] = report.exchange_failure ? Json(report.exchange_failure->str()) : Json(nullptr);
    return out;
}

inline Json to_json(const Tree& t) {
    Json edges = Json::array();
    for (auto [a, b] : t.edges) edges.push_back(Json::array({a, b}));
    Json leaves = Json::object();
    for (int leaf = 1; leaf <= t.leaves; ++leaf) leaves[std::to_string(leaf)] = t.leaf_node[static_cast<std::size_t>(leaf - 1)];
    return Json{{"internal_nodes", t.nodes.size()}, {"edges", edges}, {"leaves", leaves}, {"caterpillar", is_caterpillar(t)}};
}

}  // namespace troplin::io
