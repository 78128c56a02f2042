#pragma once

#include <bridgemap/continued_fraction.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/knot_class.hpp>

#include <cstdint>
#include <span>

namespace bridgemap {

/// Entry sum of the standard expansion.
inline std::int64_t crossing_number(const KnotClass& k) {
    const ContinuedFraction cf = standard_cf(k.canonical());
    Integer sum = 0;
    for (const auto& a : cf.entries()) sum += a;
    return to_int64(sum);
}

/// Half the length of the even expansion.
inline std::int64_t genus(const KnotClass& k) {
    return static_cast<std::int64_t>(even_cf(k.canonical()).size() / 2);
}

/// Every entry of the even expansion is +-2.
inline bool is_fibered(const KnotClass& k) {
    const ContinuedFraction cf = even_cf(k.canonical());
    for (const auto& a : cf.entries())
        if (abs_value(a) != 2) return false;
    return true;
}

/// Sum of |a_i| minus the number of adjacent sign changes. Equals the
/// crossing number for expansions whose entries all have |a_i| >= 2; used
/// only as a cross-check of the standard-expansion route.
inline std::int64_t signed_crossing_estimate(std::span<const Integer> entries) {
    Integer total = 0;
    std::int64_t changes = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        total += abs_value(entries[i]);
        if (i > 0 && entries[i].sign() * entries[i - 1].sign() < 0) ++changes;
    }
    return to_int64(total) - changes;
}

/// Kanenobu-Murakami: u(K) = 1 iff K = K(2n^2/p) for coprime positive m, n
/// with 2mn = p +- 1. Decided by enumerating divisor pairs of (p -+ 1)/2.
inline bool has_unknotting_number_one(const KnotClass& k) {
    const Rational& r = k.canonical();
    const Integer& p = r.p();
    for (const Integer& half : {Integer((p - 1) / 2), Integer((p + 1) / 2)}) {
        if (half < 1) continue;
        for (const auto& n : divisors(half)) {
            const Integer m = half / n;
            if (gcd(m, n) != 1) continue;
            const Integer q = mod_floor(2 * n * n, p);
            if (q == 0) continue;
            if (schubert_equivalent(Rational(q, p), r)) return true;
        }
    }
    return false;
}

}  // namespace bridgemap
