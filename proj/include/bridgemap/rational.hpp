#pragma once

#include <bridgemap/error.hpp>
#include <bridgemap/integer.hpp>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace bridgemap {

/// A reduced fraction q/p with p odd and 0 < q < p, naming the 2-bridge knot K(q/p).
class Rational {
public:
    /// Validates the knot invariants; an even denominator raises LinkNotKnot.
    Rational(Integer q, Integer p) : q_(std::move(q)), p_(std::move(p)) {
        if (p_ < 1) throw InvalidInput("denominator must be positive: " + str());
        if (p_ % 2 == 0) throw LinkNotKnot(str() + " has even denominator (a 2-bridge link, not a knot)");
        if (q_ <= 0 || q_ >= p_) throw InvalidInput(str() + " is not in the open interval (0,1)");
        if (gcd(q_, p_) != 1) throw InvalidInput(str() + " is not reduced");
    }

    const Integer& q() const noexcept { return q_; }
    const Integer& p() const noexcept { return p_; }

    std::string str() const { return q_.str() + "/" + p_.str(); }

    friend bool operator==(const Rational&, const Rational&) = default;

    /// Orders by denominator, then numerator.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.q_ != b.q_) return a.q_ < b.q_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    Integer q_;
    Integer p_;
};

namespace detail {

inline std::size_t parse_digits(std::string_view text, std::size_t pos, Integer& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a digit", start);
    out = Integer(std::string(text.substr(start, pos - start)));
    return pos;
}

}  // namespace detail

/// Parses "q/p". Syntax errors carry a position; semantic ones (even p,
/// unreduced, out of range) come from the Rational constructor.
inline Rational parse_rational(std::string_view text) {
    Integer q, p;
    std::size_t pos = detail::parse_digits(text, 0, q);
    if (pos >= text.size() || text[pos] != '/') throw ParseError("expected '/'", pos);
    pos = detail::parse_digits(text, pos + 1, p);
    if (pos != text.size()) throw ParseError("unexpected trailing character", pos);
    return Rational(std::move(q), std::move(p));
}

}  // namespace bridgemap
