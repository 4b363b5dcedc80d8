#pragma once

// Min-plus arithmetic over T = Q ∪ {∞}: ⊕ is min, ⊗ is +.

#include <troplin/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace troplin {

class TropicalScalar {
public:
    /// Default-constructed scalars are ∞, the neutral element of ⊕.
    TropicalScalar() = default;
    TropicalScalar(Rational value) : value_(std::move(value)) {}
    TropicalScalar(long long value) : value_(Rational(value)) {}
    TropicalScalar(int value) : value_(Rational(value)) {}

    static TropicalScalar infinity() { return {}; }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }

    const Rational& value() const {
        if (!value_) throw InvalidArgument("value() of tropical infinity");
        return *value_;
    }

    friend bool operator==(const TropicalScalar& a, const TropicalScalar& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return *a.value_ == *b.value_;
    }

    /// Total order with ∞ as the largest element.
    friend std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
            return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (*a.value_ < *b.value_) return std::strong_ordering::less;
        if (*b.value_ < *a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return value_ ? format_rational(*value_) : std::string("inf"); }

    static TropicalScalar parse(std::string_view text) {
        if (text == "inf") return infinity();
        return TropicalScalar(parse_rational(text));
    }

private:
    std::optional<Rational> value_;
};

/// Tropical sum a ⊕ b.
inline TropicalScalar t_min(const TropicalScalar& a, const TropicalScalar& b) {
    return (b < a) ? b : a;
}

/// Tropical product a ⊗ b; ∞ absorbs.
inline TropicalScalar t_plus(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.is_infinite() || b.is_infinite()) return TropicalScalar::infinity();
    return TropicalScalar(a.value() + b.value());
}

/// True iff the minimum of `terms` is attained at two or more indices, or is ∞.
inline bool min_achieved_twice(std::span<const TropicalScalar> terms) {
    if (terms.empty()) throw InvalidArgument("min_achieved_twice: empty term list");
    const TropicalScalar* best = &terms[0];
    int count = 1;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const auto cmp = terms[k] <=> *best;
        if (cmp < 0) {
            best = &terms[k];
            count = 1;
        } else if (cmp == 0) {
            ++count;
        }
    }
    return best->is_infinite() || count >= 2;
}

inline bool min_achieved_twice(std::initializer_list<TropicalScalar> terms) {
    return min_achieved_twice(std::span<const TropicalScalar>(terms.begin(), terms.size()));
}

/// A vector of T^n. Entry k belongs to ground-set element k+1.
class TropicalVector {
public:
    TropicalVector() = default;
    explicit TropicalVector(std::size_t n) : entries_(n) {}
    TropicalVector(std::vector<TropicalScalar> entries) : entries_(std::move(entries)) {}
    TropicalVector(std::initializer_list<TropicalScalar> entries) : entries_(entries) {}

    static TropicalVector from_point(const Point& v) {
        TropicalVector out(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) out.entries_[k] = v[k];
        return out;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    TropicalScalar& operator[](std::size_t k) { return entries_[k]; }
    const TropicalScalar& operator[](std::size_t k) const { return entries_[k]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<TropicalScalar>& entries() const noexcept { return entries_; }

    /// Bit k set iff entry k is finite.
    std::uint32_t support_bits() const {
        std::uint32_t bits = 0;
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (entries_[k].is_finite()) bits |= (std::uint32_t{1} << k);
        }
        return bits;
    }

    bool is_all_infinite() const { return support_bits() == 0; }

    /// Adds λ to every finite entry (the λ·1 shift).
    TropicalVector shifted(const Rational& lambda) const {
        TropicalVector out = *this;
        for (auto& x : out.entries_) {
            if (x.is_finite()) x = TropicalScalar(x.value() + lambda);
        }
        return out;
    }

    friend bool operator==(const TropicalVector&, const TropicalVector&) = default;

    std::string str() const {
        std::string out = "(";
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (k != 0) out += ", ";
            out += entries_[k].str();
        }
        return out + ")";
    }

private:
    std::vector<TropicalScalar> entries_;
};

/// x ⊤ y: min_i (x_i + y_i) is attained at least twice or is ∞.
inline bool is_orthogonal(const TropicalVector& x, const TropicalVector& y) {
    if (x.size() != y.size()) throw InvalidArgument("is_orthogonal: length mismatch");
    if (x.size() == 0) return true;
    std::vector<TropicalScalar> terms;
    terms.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) terms.push_back(t_plus(x[k], y[k]));
    return min_achieved_twice(terms);
}

class TropicalMatrix {
public:
    TropicalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {
        if (rows == 0 || cols == 0) throw InvalidArgument("TropicalMatrix: dimensions must be >= 1");
    }

    TropicalMatrix(std::initializer_list<std::initializer_list<TropicalScalar>> rows)
        : TropicalMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw InvalidArgument("TropicalMatrix: ragged rows");
            std::size_t c = 0;
            for (const auto& x : row) (*this)(r, c++) = x;
            ++r;
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    TropicalScalar& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const TropicalScalar& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    /// Submatrix keeping every row and the given columns, in the given order.
    TropicalMatrix columns(std::span<const std::size_t> keep) const {
        TropicalMatrix out(rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = (*this)(r, keep[c]);
        }
        return out;
    }

    friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<TropicalScalar> cells_;
};

namespace detail {

inline void tdet_search(const TropicalMatrix& a, std::size_t row, std::uint32_t used, const Rational& partial,
                        std::optional<Rational>& best) {
    if (row == a.rows()) {
        if (!best || partial < *best) best = partial;
        return;
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if ((used >> c) & 1U) continue;
        const auto& x = a(row, c);
        if (x.is_infinite()) continue;
        tdet_search(a, row + 1, used | (std::uint32_t{1} << c), partial + x.value(), best);
    }
}

}  // namespace detail

/// Tropical determinant: min over permutations σ of Σ_r a[r, σ(r)].
/// Permutations through an ∞ entry are pruned; the result is ∞ if none survive.
inline TropicalScalar tdet(const TropicalMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidArgument("tdet: matrix is not square");
    if (a.rows() > 31) throw InvalidArgument("tdet: matrix too large");
    std::optional<Rational> best;
    detail::tdet_search(a, 0, 0, Rational(0), best);
    return best ? TropicalScalar(*best) : TropicalScalar::infinity();
}

}  // namespace troplin
