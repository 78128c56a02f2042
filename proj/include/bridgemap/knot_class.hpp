#pragma once

#include <bridgemap/continued_fraction.hpp>
#include <bridgemap/integer.hpp>
#include <bridgemap/rational.hpp>

#include <cstdint>

namespace bridgemap {

/// Schubert's criterion with mirror images identified: same p and
/// q = +-q' or q q' = +-1 (mod p).
inline bool schubert_equivalent(const Rational& a, const Rational& b) {
    if (a.p() != b.p()) return false;
    const Integer& p = a.p();
    const Integer diff = mod_floor(a.q() - b.q(), p);
    const Integer sum = mod_floor(a.q() + b.q(), p);
    if (diff == 0 || sum == 0) return true;
    const Integer prod = mod_floor(a.q() * b.q(), p);
    return prod == 1 || prod == p - 1;
}

/// A 2-bridge knot up to Schubert equivalence and mirror image, with its
/// crossing number and genus cached at construction.
class KnotClass {
public:
    explicit KnotClass(const Rational& r)
        : canonical_(canonical_representative(r)),
          even_rep_(even_representative(r)),
          crossing_(0),
          genus_(static_cast<std::int64_t>(even_cf(r).size() / 2)) {
        const ContinuedFraction cf = standard_cf(r);
        Integer sum = 0;
        for (const auto& a : cf.entries()) sum += a;
        crossing_ = to_int64(sum);
    }

    const Rational& canonical() const noexcept { return canonical_; }
    const Rational& even_rep() const noexcept { return even_rep_; }
    std::int64_t crossing() const noexcept { return crossing_; }
    std::int64_t genus() const noexcept { return genus_; }

    std::string str() const { return canonical_.str(); }

    friend bool operator==(const KnotClass& a, const KnotClass& b) { return a.canonical_ == b.canonical_; }
    friend auto operator<=>(const KnotClass& a, const KnotClass& b) { return a.canonical_ <=> b.canonical_; }

private:
    Rational canonical_;
    Rational even_rep_;
    std::int64_t crossing_;
    std::int64_t genus_;
};

inline KnotClass canonical_class(const Rational& r) { return KnotClass(r); }

inline KnotClass knot_from_cf(std::span<const Integer> entries) { return KnotClass(eval_cf(entries)); }
inline KnotClass knot_from_cf(const ContinuedFraction& cf) { return KnotClass(eval_cf(cf)); }

}  // namespace bridgemap
