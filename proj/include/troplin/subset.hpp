#pragma once

#include <troplin/error.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace troplin {

/// Largest supported ground set. Subsets are stored as 32-bit masks, and
/// several structures are indexed by all 2^n subsets.
inline constexpr int kMaxGroundSet = 16;

/// A subset of the ground set [n] = {1, ..., n}. Element e is bit e-1.
class Subset {
public:
    constexpr Subset() = default;

    Subset(std::initializer_list<int> elements) {
        for (int e : elements) insert_checked(e);
    }

    static constexpr Subset from_bits(std::uint32_t bits) {
        Subset s;
        s.bits_ = bits;
        return s;
    }

    /// Builds a subset from 1-based elements; rejects duplicates and out-of-range values.
    static Subset from_elements(std::span<const int> elements) {
        Subset s;
        for (int e : elements) s.insert_checked(e);
        return s;
    }

    /// {1, ..., n}
    static constexpr Subset full(int n) {
        return from_bits(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    constexpr bool contains(int e) const noexcept {
        return e >= 1 && e <= 32 && ((bits_ >> (e - 1)) & 1U) != 0;
    }
    constexpr bool contains(Subset other) const noexcept { return (other.bits_ & ~bits_) == 0; }

    constexpr Subset with(int e) const noexcept { return from_bits(bits_ | (std::uint32_t{1} << (e - 1))); }
    constexpr Subset without(int e) const noexcept { return from_bits(bits_ & ~(std::uint32_t{1} << (e - 1))); }

    /// Smallest element, or 0 for the empty set.
    constexpr int min_element() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr Subset operator|(Subset a, Subset b) noexcept { return from_bits(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) noexcept { return from_bits(a.bits_ & b.bits_); }
    friend constexpr Subset operator-(Subset a, Subset b) noexcept { return from_bits(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(Subset a, Subset b) noexcept { return a.bits_ == b.bits_; }

    /// Lexicographic order on the increasing element lists (so {1,2} < {1,2,3} < {1,3} < {2}).
    friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) noexcept {
        const std::uint32_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return std::strong_ordering::equal;
        const std::uint32_t low = diff & (~diff + 1);
        // Common prefix is everything below `low`; the side owning `low` has the
        // smaller next element unless the other side has already ended.
        const bool a_owns = (a.bits_ & low) != 0;
        const std::uint32_t other = a_owns ? b.bits_ : a.bits_;
        const bool other_continues = (other & ~((low << 1) - 1)) != 0;
        if (other_continues) return a_owns ? std::strong_ordering::less : std::strong_ordering::greater;
        return a_owns ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    /// "{1,2,4}"
    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
        return out + "}";
    }

    /// "124" when every element is a single digit, otherwise the braced form.
    std::string compact() const {
        if (bits_ >= (std::uint32_t{1} << 9)) return str();
        std::string out;
        for (int e : elements()) out += static_cast<char>('0' + e);
        return out.empty() ? std::string("{}") : out;
    }

private:
    void insert_checked(int e) {
        if (e < 1 || e > kMaxGroundSet) {
            throw InvalidArgument("subset element " + std::to_string(e) + " outside 1.." + std::to_string(kMaxGroundSet));
        }
        if (contains(e)) throw InvalidArgument("duplicate subset element " + std::to_string(e));
        bits_ |= std::uint32_t{1} << (e - 1);
    }

    std::uint32_t bits_ = 0;
};

/// All k-subsets of [n] in lexicographic order.
inline std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j + 1;
    while (true) {
        out.push_back(Subset::from_elements(pick));
        int j = k - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - k + j + 1) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

}  // namespace troplin
