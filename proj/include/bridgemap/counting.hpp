#pragma once

#include <bridgemap/continued_fraction.hpp>
#include <bridgemap/count_table.hpp>
#include <bridgemap/error.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/invariants.hpp>
#include <bridgemap/knot_class.hpp>
#include <bridgemap/ors.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bridgemap {

/// Two-variable coefficient: knots of genus (2n+1)g_r + l and crossing
/// (2n+1)c_r + k arising from type 2n+1, for a non-symmetric (A) or
/// symmetric (B) even expansion of the target.
inline Integer hbar(std::int64_t n, std::int64_t l, std::int64_t k, bool symmetric) {
    if (n < 1) throw InvalidInput("hbar: n must be >= 1");
    if (l < -n || l > n) throw InvalidInput("hbar: l must satisfy -n <= l <= n");
    if (k < 0) throw InvalidInput("hbar: k must be >= 0");
    const std::int64_t nl = n + l;
    const Integer choose_gaps = binomial(2 * n, nl);

    // Ways to spread k over nl nonzero gaps: choose p of them to receive a
    // positive share (compositions of k into p parts), 2 sign choices each.
    auto spread = [](std::int64_t gaps, std::int64_t total, std::int64_t sign_offset) {
        Integer s = 0;
        for (std::int64_t p = 1; p <= std::min(total, gaps); ++p)
            s += pow2(p - sign_offset) * binomial(gaps, p) * binomial(total - 1, p - 1);
        return s;
    };

    if (k == 0) {
        if (!symmetric) return choose_gaps;
        if (nl % 2 != 0) return choose_gaps / 2;
        return (choose_gaps + binomial(n, nl / 2)) / 2;
    }
    if (nl == 0) return 0;
    if (!symmetric) return choose_gaps * spread(nl, k, 0);
    Integer value = choose_gaps * spread(nl, k, 1);
    if (nl % 2 == 0 && k % 2 == 0) value += binomial(n, nl / 2) * spread(nl / 2, k / 2, 1);
    return value;
}

/// One-variable coefficient for crossing (2n+1)c_r + k.
inline Integer fc_bar(std::int64_t n, std::int64_t k, bool symmetric) {
    if (n < 1 || k < 0) throw InvalidInput("fc_bar: need n >= 1 and k >= 0");
    const Integer base = binomial(2 * n + k - 1, k);
    if (!symmetric) return pow2(2 * n) * base;
    Integer value = pow2(2 * n - 1) * base;
    if (k % 2 == 0) value += pow2(n - 1) * binomial(n + k / 2 - 1, k / 2);
    return value;
}

/// Target data the closed forms depend on.
struct TargetProfile {
    std::int64_t genus;
    std::int64_t crossing;
    bool even_symmetric;      // symmetry of the even expansion
    bool standard_symmetric;  // symmetry of the standard expansion
    bool fibered;

    explicit TargetProfile(const KnotClass& k)
        : genus(k.genus()),
          crossing(k.crossing()),
          even_symmetric(is_symmetric(even_cf(k.canonical()).entries())),
          standard_symmetric(is_symmetric(standard_cf(k.canonical()).entries())),
          fibered(is_fibered(k)) {}

    /// Largest n with (2n+1) c_r <= max_crossing (0 if none).
    std::int64_t max_type(std::int64_t max_crossing) const {
        std::int64_t n = 0;
        while ((2 * (n + 1) + 1) * crossing <= max_crossing) ++n;
        return n;
    }

    /// Largest genus any type up to max_crossing can produce.
    std::int64_t max_genus(std::int64_t max_crossing) const {
        const std::int64_t n = max_type(max_crossing);
        return n == 0 ? 0 : (2 * n + 1) * genus + n;
    }
};

/// Coefficient of s^g t^c in the two-variable generating function, summed
/// over every type 2n+1 whose genus and crossing ranges contain (g, c).
inline Integer h_closed(const KnotClass& target, std::int64_t g, std::int64_t c) {
    const TargetProfile t(target);
    Integer total = 0;
    for (std::int64_t n = 1; (2 * n + 1) * t.crossing <= c; ++n) {
        const std::int64_t l = g - (2 * n + 1) * t.genus;
        const std::int64_t k = c - (2 * n + 1) * t.crossing;
        if (l < -n || l > n) continue;
        total += hbar(n, l, k, t.even_symmetric);
    }
    return total;
}

/// Coefficient of t^c in the one-variable generating function.
inline Integer fc_closed(const KnotClass& target, std::int64_t c) {
    const TargetProfile t(target);
    Integer total = 0;
    for (std::int64_t n = 1; (2 * n + 1) * t.crossing <= c; ++n)
        total += fc_bar(n, c - (2 * n + 1) * t.crossing, t.standard_symmetric);
    return total;
}

/// Fibered sources of genus g and crossing c. Nonzero only at
/// g = (2n+1)g_r + n with 0 <= c - (2n+1)c_r <= 4n.
inline Integer hf_closed(const KnotClass& target, std::int64_t g, std::int64_t c) {
    const TargetProfile t(target);
    if (!t.fibered) throw InvalidInput("fibered counts need a fibered target; " + target.str() + " is not fibered");
    for (std::int64_t n = 1; (2 * n + 1) * t.genus + n <= g; ++n) {
        if ((2 * n + 1) * t.genus + n != g) continue;
        const std::int64_t k = c - (2 * n + 1) * t.crossing;
        if (k < 0 || k > 4 * n) return 0;
        if (!t.even_symmetric) return binomial(4 * n, k);
        if (k % 2 != 0) return binomial(4 * n, k) / 2;
        return (binomial(4 * n, k) + binomial(2 * n, k / 2)) / 2;
    }
    return 0;
}

/// All fibered sources of genus g: 16^n, 4^n(4^n+1)/2, or 0.
inline Integer hf_total(const KnotClass& target, std::int64_t g) {
    const TargetProfile t(target);
    if (!t.fibered) throw InvalidInput("fibered counts need a fibered target; " + target.str() + " is not fibered");
    for (std::int64_t n = 1; (2 * n + 1) * t.genus + n <= g; ++n) {
        if ((2 * n + 1) * t.genus + n != g) continue;
        const Integer four_n = pow2(2 * n);
        if (!t.even_symmetric) return four_n * four_n;
        return four_n * (four_n + 1) / 2;
    }
    return 0;
}

/// Degree-one counts on the cells where a closed form is known; nullopt
/// elsewhere.
///  (1) g beyond the genus range of type 2n-1: c = (2n+1)c_r gives 0 and
///      c = (2n+1)c_r + 1 gives h/n.
///  (2) n <= g_r: genus (2n+1)g_r - n gives 0; genus one higher gives 4 (A)
///      or 2 (B) when c - (2n+1)c_r is positive and odd, else 0.
inline std::optional<Integer> h1_partial(const KnotClass& target, std::int64_t g, std::int64_t c) {
    const TargetProfile t(target);
    for (std::int64_t n = 1; (2 * n + 1) * t.crossing <= c; ++n) {
        const std::int64_t base_c = (2 * n + 1) * t.crossing;
        if (c != base_c && c != base_c + 1) continue;
        if (g <= (2 * n - 1) * t.genus + (n - 1)) continue;
        if (c == base_c) return Integer(0);
        const Integer h = h_closed(target, g, c);
        if (h % n != 0) throw ConsistencyError("h(" + std::to_string(g) + "," + std::to_string(c) + ") = " + h.str() +
                                               " is not divisible by n = " + std::to_string(n));
        return Integer(h / n);
    }
    for (std::int64_t n = 1; n <= t.genus; ++n) {
        const std::int64_t min_g = (2 * n + 1) * t.genus - n;
        if (g == min_g) return Integer(0);
        if (g == min_g + 1) {
            const std::int64_t k = c - (2 * n + 1) * t.crossing;
            if (k <= 0 || k % 2 == 0) return Integer(0);
            return Integer(t.even_symmetric ? 2 : 4);
        }
    }
    return std::nullopt;
}

enum class GenusCount { zero, one, infinite };

inline std::string to_string(GenusCount v) {
    switch (v) {
    case GenusCount::zero: return "0";
    case GenusCount::one: return "1";
    case GenusCount::infinite: return "infinite";
    }
    return "?";
}

/// How many sources of genus g exist: none, exactly one (the minimal-genus
/// knot of a type not overlapping the previous type), or infinitely many.
inline GenusCount genus_count_class(const KnotClass& target, std::int64_t g) {
    if (g < 1) throw InvalidInput("genus must be >= 1");
    const std::int64_t gr = target.genus();
    if (g < 3 * gr - 1) return GenusCount::zero;
    for (std::int64_t n = 1; (2 * n + 1) * gr - n <= g; ++n) {
        const std::int64_t type_max = (2 * n + 1) * gr + n;
        const std::int64_t next_min = (2 * n + 3) * gr - (n + 1);
        if (type_max < g && g < next_min) return GenusCount::zero;
        const std::int64_t prev_max = (2 * n - 1) * gr + (n - 1);
        if (g == (2 * n + 1) * gr - n && prev_max < g) return GenusCount::one;
    }
    return GenusCount::infinite;
}

enum class CountFilter { all, fibered, degree_one, unknotting_one };

inline std::string to_string(CountFilter f) {
    switch (f) {
    case CountFilter::all: return "all";
    case CountFilter::fibered: return "fibered";
    case CountFilter::degree_one: return "degree-one";
    case CountFilter::unknotting_one: return "unknotting-one";
    }
    return "?";
}

inline bool passes(const ImageRecord& rec, CountFilter filter) {
    switch (filter) {
    case CountFilter::all: return true;
    case CountFilter::fibered: return rec.fibered;
    case CountFilter::degree_one: return rec.degree_one;
    case CountFilter::unknotting_one: return rec.unknotting_one;
    }
    return false;
}

/// Buckets the enumerated images by (genus, crossing).
inline CountTable count_brute(const KnotClass& target, std::int64_t max_crossing, CountFilter filter,
                              const EnumerationOptions& options = {}) {
    CountTable table(Provenance::brute_force);
    for (const auto& rec : enumerate_images(target, max_crossing, options))
        if (passes(rec, filter)) table.add(rec.genus(), rec.crossing(), 1);
    return table;
}

/// Closed-form value of one cell, or nullopt where no closed form applies.
inline std::optional<Integer> closed_value(const KnotClass& target, std::int64_t g, std::int64_t c, CountFilter filter) {
    switch (filter) {
    case CountFilter::all: return h_closed(target, g, c);
    case CountFilter::fibered: return hf_closed(target, g, c);
    case CountFilter::degree_one: return h1_partial(target, g, c);
    case CountFilter::unknotting_one: return std::nullopt;
    }
    return std::nullopt;
}

/// Closed-form table over every cell with crossing <= max_crossing; for the
/// degree-one filter only covered cells contribute.
inline CountTable closed_table(const KnotClass& target, std::int64_t max_crossing, CountFilter filter) {
    if (filter == CountFilter::unknotting_one) throw InvalidInput("no closed form for the unknotting-one filter");
    const TargetProfile t(target);
    CountTable table(Provenance::closed_form);
    const std::int64_t g_hi = t.max_genus(max_crossing);
    for (std::int64_t c = 1; c <= max_crossing; ++c)
        for (std::int64_t g = 1; g <= g_hi; ++g)
            if (auto v = closed_value(target, g, c, filter)) table.add(g, c, *v);
    return table;
}

/// Cells (within crossing <= max_crossing) where the closed form and the
/// brute-force table disagree. Cells without a closed form are skipped.
inline std::vector<CellDiff> closed_vs_brute(const KnotClass& target, std::int64_t max_crossing, CountFilter filter,
                                             const CountTable& brute) {
    const TargetProfile t(target);
    std::vector<CellDiff> out;
    const std::int64_t g_hi = std::max<std::int64_t>(t.max_genus(max_crossing) + 1, 1);
    for (std::int64_t c = 1; c <= max_crossing; ++c)
        for (std::int64_t g = 1; g <= g_hi; ++g) {
            const auto v = closed_value(target, g, c, filter);
            if (!v) continue;
            const Integer b = brute.at(g, c);
            if (*v != b) out.push_back({g, c, *v, b});
        }
    for (const auto& [key, v] : brute.entries())
        if (key.first > g_hi || key.second > max_crossing) out.push_back({key.first, key.second, 0, v});
    return out;
}

struct Monomial {
    std::optional<std::int64_t> genus;  // empty for the one-variable series
    std::int64_t crossing;
    Integer coefficient;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class SeriesMode { two_var, one_var };

/// Nonzero coefficients with crossing <= max_crossing, ascending (c, g).
inline std::vector<Monomial> series_coefficients(const KnotClass& target, std::int64_t max_crossing, SeriesMode mode) {
    const TargetProfile t(target);
    std::vector<Monomial> out;
    const std::int64_t g_hi = t.max_genus(max_crossing);
    for (std::int64_t c = 1; c <= max_crossing; ++c) {
        if (mode == SeriesMode::one_var) {
            Integer v = fc_closed(target, c);
            if (v != 0) out.push_back({std::nullopt, c, std::move(v)});
            continue;
        }
        for (std::int64_t g = 1; g <= g_hi; ++g) {
            Integer v = h_closed(target, g, c);
            if (v != 0) out.push_back({g, c, std::move(v)});
        }
    }
    return out;
}

}  // namespace bridgemap
