#pragma once

#include <bridgemap/continued_fraction.hpp>
#include <bridgemap/error.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace bridgemap {

/// Unknotting-number-one sources over the genus-one target K([a, 2 sign]).
///  n >= 1: [a, 2s, a, 2s, ..., a, 2s  (6n+2 entries), -a, -2s, ..., -a, -2s  (6n entries)],
///          genus 6n+1.
///  n == 0: the genus-3 witness [a,2,2a,-2,-2a,-2] (sign +1) or
///          [a,-2,2a-2,2,-2a,2] (sign -1).
inline std::vector<Integer> u1_family_cf(std::int64_t a, int sign, std::int64_t n) {
    if (a < 2 || a % 2 != 0) throw InvalidInput("u1_family: a must be a positive even integer");
    if (sign != 1 && sign != -1) throw InvalidInput("u1_family: sign must be +1 or -1");
    if (n < 0) throw InvalidInput("u1_family: n must be >= 0");
    if (n == 0) {
        if (sign > 0) return to_integers({a, 2, 2 * a, -2, -2 * a, -2});
        return to_integers({a, -2, 2 * a - 2, 2, -2 * a, 2});
    }
    std::vector<Integer> out;
    for (std::int64_t i = 0; i < 3 * n + 1; ++i) {
        out.emplace_back(a);
        out.emplace_back(2 * sign);
    }
    for (std::int64_t i = 0; i < 3 * n; ++i) {
        out.emplace_back(-a);
        out.emplace_back(-2 * sign);
    }
    return out;
}

inline Rational u1_family(std::int64_t a, int sign, std::int64_t n) { return eval_cf(u1_family_cf(a, sign, n)); }

/// The genus-one target K([a, 2 sign]) of u1_family.
inline Rational u1_family_target(std::int64_t a, int sign) {
    if (a < 2 || a % 2 != 0) throw InvalidInput("u1_family: a must be a positive even integer");
    return eval_cf(to_integers({a, 2 * sign}));
}

enum class FamilyKind { fixed_source_genus, fixed_target_genus };

struct FamilyPair {
    std::vector<Integer> source_cf;
    std::vector<Integer> target_cf;
    Rational source;
    Rational target;
};

namespace detail {

inline std::vector<Integer> finish_family(const std::vector<std::optional<std::int64_t>>& slots) {
    std::vector<Integer> out;
    for (std::size_t i = 1; i < slots.size(); ++i) {
        if (!slots[i]) throw ConsistencyError("family construction left entry " + std::to_string(i) + " unset");
        out.emplace_back(*slots[i]);
    }
    return out;
}

inline void assign(std::vector<std::optional<std::int64_t>>& slots, std::int64_t idx, std::int64_t value) {
    if (idx < 1 || idx >= static_cast<std::int64_t>(slots.size()))
        throw ConsistencyError("family construction index out of range");
    if (slots[idx] && *slots[idx] != value) throw ConsistencyError("family construction assigns entry twice");
    slots[idx] = value;
}

inline std::int64_t alt(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Pairs K -> K' of unknotting-number-one knots.
///  fixed_source_genus (g >= 3): source of genus g, target K([2,2]).
///  fixed_target_genus (g >= 1): target K([a]) of genus g and source
///  K([a, 2, a^-1, -2, -a]).
inline FamilyPair gg_families(std::int64_t g, FamilyKind which) {
    if (which == FamilyKind::fixed_source_genus) {
        if (g < 3) throw InvalidInput("fixed_source_genus needs g >= 3: genus-1 and genus-2 sources are minimal");
        std::vector<std::optional<std::int64_t>> a(2 * g + 1);
        detail::assign(a, 1, 2);
        if (g % 2 == 1) {
            for (std::int64_t k = 1; k <= (g - 1) / 2; ++k) {
                detail::assign(a, 2 * k, 2);
                detail::assign(a, 2 * k + 1, 4);
            }
            detail::assign(a, g + 1, detail::alt((g - 1) / 2) * 2);
        } else {
            for (std::int64_t k = 1; k <= g / 2; ++k) detail::assign(a, 2 * k, 2);
            for (std::int64_t k = 1; k <= (g - 4) / 2; ++k) detail::assign(a, 2 * k + 1, 4);
            detail::assign(a, g - 1, 2);
            detail::assign(a, g + 1, detail::alt(g / 2) * 2);
        }
        for (std::int64_t k = 0; k <= g - 2; ++k) detail::assign(a, 2 * g - k, -*a[k + 2]);
        auto source_cf = detail::finish_family(a);
        auto target_cf = to_integers({2, 2});
        Rational source = eval_cf(source_cf), target = eval_cf(target_cf);
        return {std::move(source_cf), std::move(target_cf), std::move(source), std::move(target)};
    }

    if (g < 1) throw InvalidInput("fixed_target_genus needs g >= 1");
    std::vector<std::optional<std::int64_t>> a(2 * g + 1);
    for (std::int64_t k = 1; k <= (g + 1) / 2; ++k) detail::assign(a, 2 * k - 1, detail::alt(k + 1) * 2);
    for (std::int64_t k = 1; k <= g / 2; ++k) detail::assign(a, 2 * k, detail::alt(k + 1) * 2);
    for (std::int64_t k = 1; k <= g / 2; ++k) detail::assign(a, 2 * g - (2 * k - 1), detail::alt(k) * 2);
    for (std::int64_t k = 1; k <= (g + 1) / 2; ++k) detail::assign(a, 2 * g - (2 * k - 2), detail::alt(k + 1) * 2);
    auto target_cf = detail::finish_family(a);

    // [a, 2, a^-1, -2, -a]
    std::vector<Integer> source_cf(target_cf);
    source_cf.emplace_back(2);
    source_cf.insert(source_cf.end(), target_cf.rbegin(), target_cf.rend());
    source_cf.emplace_back(-2);
    for (const auto& x : target_cf) source_cf.emplace_back(-x);
    Rational source = eval_cf(source_cf), target = eval_cf(target_cf);
    return {std::move(source_cf), std::move(target_cf), std::move(source), std::move(target)};
}

}  // namespace bridgemap
