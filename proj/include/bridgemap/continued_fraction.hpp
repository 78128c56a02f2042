#pragma once

#include <bridgemap/error.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/rational.hpp>

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bridgemap {

enum class Flavor { general, standard, even };

/// Finite sequence [a1,...,am] denoting 1/(a1 + 1/(a2 + ... + 1/am)).
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<Integer> entries, Flavor flavor = Flavor::general)
        : entries_(std::move(entries)), flavor_(flavor) {
        if (entries_.empty()) throw InvalidInput("continued fraction must be nonempty");
        switch (flavor_) {
        case Flavor::general:
            break;
        case Flavor::standard:
            for (const auto& a : entries_)
                if (a <= 0) throw InvalidInput("standard expansion needs positive entries: " + str());
            if (entries_.front() < 2 || entries_.back() < 2)
                throw InvalidInput("standard expansion needs a1 >= 2 and am >= 2: " + str());
            break;
        case Flavor::even:
            if (entries_.size() % 2 != 0) throw InvalidInput("even expansion needs even length: " + str());
            for (const auto& a : entries_)
                if (a == 0 || a % 2 != 0) throw InvalidInput("even expansion needs nonzero even entries: " + str());
            break;
        }
    }

    std::span<const Integer> entries() const noexcept { return entries_; }
    Flavor flavor() const noexcept { return flavor_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += entries_[i].str();
        }
        return out + "]";
    }

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<Integer> entries_;
    Flavor flavor_;
};

/// Numerator and denominator of the nested fraction, unreduced, from the
/// left-to-right continuant product prod [[a_i,1],[1,0]]. Zero entries are
/// legal: [.., x, 0, y, ..] collapses to [.., x+y, ..].
inline std::pair<Integer, Integer> continuant_fraction(std::span<const Integer> entries) {
    // (m00, m10) is the first column of the running product, (m01, m11) the second.
    Integer m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (const auto& a : entries) {
        Integer n00 = a * m00 + m01;
        Integer n10 = a * m10 + m11;
        m01 = std::move(m00);
        m11 = std::move(m10);
        m00 = std::move(n00);
        m10 = std::move(n10);
    }
    return {std::move(m10), std::move(m00)};
}

/// Exact value of the expansion, normalized to the knot's rational in (0,1):
/// the numerator is reduced modulo the denominator, so mirror images and
/// integer shifts are identified.
inline Rational eval_cf(std::span<const Integer> entries) {
    if (entries.empty()) throw InvalidInput("continued fraction must be nonempty");
    auto [num, den] = continuant_fraction(entries);
    if (den == 0) throw NotAKnot("continued fraction evaluates to infinity: not a 2-bridge knot");
    Integer g = gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den % 2 == 0) throw LinkNotKnot("continued fraction evaluates to " + num.str() + "/" + den.str() + ": a link, not a knot");
    if (den == 1) throw NotAKnot("continued fraction evaluates to an integer: not a 2-bridge knot");
    return Rational(mod_floor(num, den), den);
}

inline Rational eval_cf(const ContinuedFraction& cf) { return eval_cf(cf.entries()); }

/// {q, p-q, q^-1, p-q^-1} mod p: the Schubert orbit with mirrors identified.
inline std::array<Integer, 4> schubert_orbit(const Rational& r) {
    const Integer inv = mod_inverse(r.q(), r.p());
    return {r.q(), r.p() - r.q(), inv, r.p() - inv};
}

inline Rational canonical_representative(const Rational& r) {
    const auto orbit = schubert_orbit(r);
    return Rational(*std::min_element(orbit.begin(), orbit.end()), r.p());
}

/// Smallest even numerator in the orbit. One always exists since q and p-q
/// have opposite parity.
inline Rational even_representative(const Rational& r) {
    const auto orbit = schubert_orbit(r);
    const Integer* best = nullptr;
    for (const auto& q : orbit)
        if (q % 2 == 0 && (best == nullptr || q < *best)) best = &q;
    return Rational(*best, r.p());
}

/// All-positive expansion with a1 >= 2 and am >= 2 of an orbit member.
inline ContinuedFraction standard_cf(const Rational& r) {
    Integer num = r.q() * 2 < r.p() ? r.q() : Integer(r.p() - r.q());
    Integer den = r.p();
    std::vector<Integer> out;
    while (num != 0) {
        Integer a = den / num;
        Integer rem = den - a * num;
        out.push_back(std::move(a));
        den = std::move(num);
        num = std::move(rem);
    }
    if (out.size() > 1 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return ContinuedFraction(std::move(out), Flavor::standard);
}

/// Nearest even integer to den/num; exact ties go to the quotient leaving a
/// positive remainder.
inline Integer nearest_even_quotient(const Integer& den, const Integer& num) {
    const Integer f = floor_div(den, num);
    if (f % 2 == 0) return f;
    // den/num lies in [f, f+1); f+1 is nearer unless den/num == f exactly.
    const bool exact = den == f * num;
    if (!exact) return f + 1;
    const Integer lo = f - 1, hi = f + 1;
    return den - lo * num > 0 ? lo : hi;
}

/// Even expansion of the orbit's even representative: all entries even and
/// nonzero, even length. Remainders strictly decrease in magnitude.
inline ContinuedFraction even_cf(const Rational& r) {
    const Rational rep = even_representative(r);
    Integer num = rep.q(), den = rep.p();
    std::vector<Integer> out;
    while (num != 0) {
        Integer a = nearest_even_quotient(den, num);
        Integer rem = den - a * num;
        out.push_back(std::move(a));
        den = std::move(num);
        num = std::move(rem);
    }
    return ContinuedFraction(std::move(out), Flavor::even);
}

/// Equal to its reverse when the last entry is positive, to its negated
/// reverse when the last entry is negative.
inline bool is_symmetric(std::span<const Integer> seq) {
    if (seq.empty()) throw InvalidInput("is_symmetric: empty sequence");
    for (const auto& a : seq)
        if (a == 0) throw InvalidInput("is_symmetric: zero entry");
    const bool negate = seq.back() < 0;
    const std::size_t m = seq.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Integer mirror = negate ? Integer(-seq[m - 1 - i]) : seq[m - 1 - i];
        if (seq[i] != mirror) return false;
    }
    return true;
}

/// Parses "[a1,a2,...,am]" with optional '-' signs and optional spaces.
inline ContinuedFraction parse_cf(std::string_view text) {
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    std::vector<Integer> entries;
    while (true) {
        skip_spaces();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        Integer value;
        pos = detail::parse_digits(text, pos, value);
        entries.push_back(negative ? Integer(-value) : value);
        skip_spaces();
        if (pos >= text.size()) throw ParseError("expected ',' or ']'", pos);
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
        ++pos;
    }
    skip_spaces();
    if (pos != text.size()) throw ParseError("unexpected trailing character", pos);
    return ContinuedFraction(std::move(entries));
}

inline std::vector<Integer> to_integers(std::initializer_list<long long> values) {
    return std::vector<Integer>(values.begin(), values.end());
}

}  // namespace bridgemap
