#pragma once

#include <troplin/error.hpp>

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#ifndef TROPLIN_SELF_CHECKS
#ifdef NDEBUG
#define TROPLIN_SELF_CHECKS 0
#else
#define TROPLIN_SELF_CHECKS 1
#endif
#endif

namespace troplin {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// A finite point of R^n. Entry k belongs to ground-set element k+1.
using Point = std::vector<Rational>;

inline std::string format_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace detail {

inline bool parse_integer(std::string_view text, BigInt& out) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
    }
    if (pos == text.size()) {
        return false;
    }
    for (std::size_t k = pos; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            return false;
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    out = BigInt(digits);
    return true;
}

}  // namespace detail

/// Parses "a" or "a/b" (a, b integers, b != 0). Throws InvalidArgument.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    if (!detail::parse_integer(text.substr(0, slash), num)) {
        throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
    }
    if (slash != std::string_view::npos) {
        if (!detail::parse_integer(text.substr(slash + 1), den) || den == 0) {
            throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

/// Parses a comma-separated list of rational literals, e.g. "0,-1/2,3".
inline Point parse_point(std::string_view text) {
    Point out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

inline std::string format_point(const Point& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != 0) out += ", ";
        out += format_rational(v[k]);
    }
    return out + ")";
}

}  // namespace troplin
