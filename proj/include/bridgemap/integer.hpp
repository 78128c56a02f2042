#pragma once

#include <bridgemap/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace bridgemap {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline int sign_of(const Integer& x) { return x.sign(); }

/// Floor division; `den` must be nonzero.
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

/// Least nonnegative residue of x modulo m (m > 0).
inline Integer mod_floor(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Integer gcd(Integer a, Integer b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// Inverse of a modulo m; throws InvalidInput when gcd(a, m) != 1.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer old_r = mod_floor(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_s - q * s;
        old_s = std::move(s);
        s = std::move(t);
    }
    if (old_r != 1) throw InvalidInput("no modular inverse: arguments are not coprime");
    return mod_floor(old_s, m);
}

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Integer pow2(std::int64_t e) {
    if (e < 0) throw InvalidInput("negative exponent");
    Integer r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

/// Narrowing conversion that refuses to truncate.
inline std::int64_t to_int64(const Integer& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw InvalidInput("integer " + x.str() + " exceeds 64-bit range");
    return x.convert_to<std::int64_t>();
}

namespace detail {

template <class U>
std::vector<std::pair<U, unsigned>> factor_trial(U n) {
    std::vector<std::pair<U, unsigned>> out;
    for (U d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

template <class U>
std::vector<Integer> expand_divisors(const std::vector<std::pair<U, unsigned>>& factors) {
    std::vector<Integer> divs{1};
    for (const auto& [prime, exp] : factors) {
        const std::size_t base = divs.size();
        Integer power = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            power *= Integer(prime);
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

/// All positive divisors of n (n >= 1), ascending. Trial division; a 64-bit
/// fast path covers everything a desk-scale enumeration produces.
inline std::vector<Integer> divisors(const Integer& n) {
    if (n < 1) throw InvalidInput("divisors: argument must be positive");
    if (n <= std::numeric_limits<std::uint64_t>::max() / 4)
        return detail::expand_divisors(detail::factor_trial(n.convert_to<std::uint64_t>()));
    return detail::expand_divisors(detail::factor_trial(n));
}

}  // namespace bridgemap
