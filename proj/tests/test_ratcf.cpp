#include <bridgemap/bridgemap.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace bridgemap;

namespace {

Rational R(long long q, long long p) { return Rational(q, p); }

std::vector<Integer> ints(std::initializer_list<long long> v) { return to_integers(v); }

}  // namespace

TEST(Rational, ValidatesInvariants) {
    EXPECT_NO_THROW(R(1, 3));
    EXPECT_THROW(R(2, 4), LinkNotKnot);
    EXPECT_THROW(R(3, 9), InvalidInput);
    EXPECT_THROW(R(0, 3), InvalidInput);
    EXPECT_THROW(R(3, 3), InvalidInput);
    EXPECT_THROW(R(1, 1), InvalidInput);
}

TEST(Rational, ParsesText) {
    EXPECT_EQ(parse_rational("7/11"), R(7, 11));
    EXPECT_EQ(parse_rational("7/11").str(), "7/11");
    EXPECT_THROW(parse_rational("2/4"), LinkNotKnot);
    for (const char* bad : {"", "7", "/11", "7/", "7//11", "a/3", "7/11x", "-1/3", " 1/3"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ParseErrorCarriesPosition) {
    try {
        parse_rational("12x/13");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Rational, HandlesValuesBeyond64Bits) {
    const auto r = parse_rational("1/340282366920938463463374607431768211457");
    EXPECT_EQ(r.p().str(), "340282366920938463463374607431768211457");
}

TEST(ContinuedFraction, FlavorsAreValidated) {
    EXPECT_NO_THROW(ContinuedFraction(ints({2, 1, 3}), Flavor::standard));
    EXPECT_THROW(ContinuedFraction(ints({1, 3}), Flavor::standard), InvalidInput);
    EXPECT_THROW(ContinuedFraction(ints({2, 1}), Flavor::standard), InvalidInput);
    EXPECT_NO_THROW(ContinuedFraction(ints({2, -2}), Flavor::even));
    EXPECT_THROW(ContinuedFraction(ints({2}), Flavor::even), InvalidInput);
    EXPECT_THROW(ContinuedFraction(ints({2, 3}), Flavor::even), InvalidInput);
    EXPECT_THROW(ContinuedFraction(ints({2, 0}), Flavor::even), InvalidInput);
    EXPECT_NO_THROW(ContinuedFraction(ints({2, 0, 2}), Flavor::general));
    EXPECT_THROW(ContinuedFraction({}, Flavor::general), InvalidInput);
}

TEST(ContinuedFraction, ParsesText) {
    EXPECT_EQ(parse_cf("[2,2,-2,2]").str(), "[2,2,-2,2]");
    EXPECT_EQ(parse_cf("[ 2, -2 ]").str(), "[2,-2]");
    for (const char* bad : {"", "2,2", "[2,2", "[]", "[2,,2]", "[2;2]", "[2,2]x", "[--2]"})
        EXPECT_THROW(parse_cf(bad), ParseError) << bad;
}

TEST(EvalCf, Examples) {
    EXPECT_EQ(eval_cf(ints({3})), R(1, 3));
    EXPECT_EQ(eval_cf(ints({2, -2})), R(2, 3));
    EXPECT_EQ(eval_cf(ints({2, 2, -2, 2})), R(4, 11));
    EXPECT_TRUE(schubert_equivalent(eval_cf(ints({2, 2, -2, 2})), R(7, 11)));
    EXPECT_EQ(eval_cf(ints({2, -2, 2, -2, 2, -2, 2, -2})), R(8, 9));
}

TEST(EvalCf, Degenerate) {
    EXPECT_THROW(eval_cf(ints({1})), NotAKnot);
    EXPECT_THROW(eval_cf(ints({2, 0})), NotAKnot);
    EXPECT_THROW(eval_cf(ints({2})), LinkNotKnot);
}

TEST(EvalCf, ContinuantMatchesDirectEvaluation) {
    // Nested fraction evaluated from the inside out with exact rationals.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Integer> a(1 + trial % 7);
        for (auto& x : a) {
            x = entry(rng);
            if (x == 0) x = 3;
        }
        Integer num = 1, den = a.back();
        for (std::size_t i = a.size() - 1; i-- > 0;) {
            // 1 / (a_i + num/den) = den / (a_i*den + num)
            Integer next_den = a[i] * den + num;
            num = den;
            den = next_den;
        }
        const auto [cn, cd] = continuant_fraction(a);
        EXPECT_EQ(cn * den, cd * num);
    }
}

TEST(EvalCf, ZeroEntryContractsNeighbours) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Integer> tail(trial % 5);
        for (auto& x : tail) x = entry(rng);
        const Integer x = entry(rng), y = entry(rng);
        std::vector<Integer> with_zero{x, 0, y}, merged{x + y};
        with_zero.insert(with_zero.end(), tail.begin(), tail.end());
        merged.insert(merged.end(), tail.begin(), tail.end());
        const auto [n1, d1] = continuant_fraction(with_zero);
        const auto [n2, d2] = continuant_fraction(merged);
        EXPECT_EQ(n1 * d2, n2 * d1);
        ++checked;
    }
    EXPECT_EQ(checked, 3000);
}

TEST(Schubert, Examples) {
    EXPECT_TRUE(schubert_equivalent(R(1, 3), R(2, 3)));
    EXPECT_TRUE(schubert_equivalent(R(1, 3), R(1, 3)));
    EXPECT_TRUE(schubert_equivalent(R(7, 11), R(4, 11)));
    EXPECT_FALSE(schubert_equivalent(R(1, 3), R(1, 5)));
}

TEST(Schubert, EquivalenceRelationUpTo499) {
    for (long long p = 3; p <= 499; p += 2) {
        std::vector<long long> qs;
        for (long long q = 1; q < p; ++q)
            if (std::gcd(q, p) == 1) qs.push_back(q);
        // Equivalent iff same canonical representative; that label is an
        // equivalence by construction, so agreement proves the relation is one.
        std::vector<Rational> rs, canon;
        for (long long q : qs) {
            rs.push_back(R(q, p));
            canon.push_back(canonical_representative(rs.back()));
        }
        for (std::size_t a = 0; a < rs.size(); ++a) {
            ASSERT_TRUE(schubert_equivalent(rs[a], rs[a]));
            for (std::size_t b = a + 1; b < rs.size(); ++b) {
                const bool eq = schubert_equivalent(rs[a], rs[b]);
                ASSERT_EQ(eq, schubert_equivalent(rs[b], rs[a]));
                ASSERT_EQ(eq, canon[a] == canon[b]) << rs[a] << " vs " << rs[b];
            }
        }
    }
}

TEST(Canonical, Examples) {
    const KnotClass k711(R(7, 11));
    EXPECT_EQ(k711.canonical(), R(3, 11));
    EXPECT_EQ(k711.even_rep(), R(4, 11));
    const KnotClass k13(R(1, 3));
    EXPECT_EQ(k13.canonical(), R(1, 3));
    EXPECT_EQ(k13.even_rep(), R(2, 3));
    const KnotClass k25(R(2, 5));
    EXPECT_EQ(k25.canonical(), R(2, 5));
    EXPECT_EQ(k25.even_rep(), R(2, 5));
}

TEST(Canonical, IdempotentAndConstantOnOrbits) {
    for (long long p = 3; p <= 1001; p += 2)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const Rational r = R(q, p);
            const Rational c = canonical_representative(r);
            ASSERT_EQ(canonical_representative(c), c);
            for (const auto& member : schubert_orbit(r)) ASSERT_EQ(canonical_representative(Rational(member, p)), c);
            const Rational e = even_representative(r);
            ASSERT_EQ(e.q() % 2, 0);
            for (const auto& member : schubert_orbit(r))
                if (member % 2 == 0) {
                    ASSERT_LE(e.q(), member);
                }
        }
}

TEST(StandardCf, Examples) {
    EXPECT_EQ(standard_cf(R(1, 3)).str(), "[3]");
    EXPECT_EQ(standard_cf(R(4, 11)).str(), "[2,1,3]");
    EXPECT_EQ(standard_cf(R(2, 5)).str(), "[2,2]");
    EXPECT_EQ(standard_cf(R(1, 9)).str(), "[9]");
    EXPECT_EQ(standard_cf(R(52, 63)).str(), "[5,1,2,1,2]");
}

TEST(StandardCf, EntrySumAgreesAcrossRepresentatives) {
    for (long long p = 3; p <= 801; p += 2)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const Rational r = R(q, p);
            const Integer inv = mod_inverse(Integer(q), Integer(p));
            const auto a = standard_cf(r);
            const auto b = standard_cf(Rational(inv, p));
            Integer sa = 0, sb = 0;
            for (const auto& x : a.entries()) sa += x;
            for (const auto& x : b.entries()) sb += x;
            ASSERT_EQ(sa, sb) << r;
        }
}

TEST(EvenCf, Examples) {
    EXPECT_EQ(even_cf(R(1, 3)).str(), "[2,-2]");
    EXPECT_EQ(even_cf(R(7, 11)).str(), "[2,2,-2,2]");
    EXPECT_EQ(even_cf(R(2, 5)).str(), "[2,2]");
    EXPECT_EQ(even_cf(R(2, 7)).str(), "[4,-2]");
    EXPECT_EQ(even_cf(R(8, 9)).str(), "[2,-2,2,-2,2,-2,2,-2]");
}

TEST(EvenCf, EvaluatesToEvenRepresentative) {
    for (long long p = 3; p <= 1001; p += 2)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const Rational r = R(q, p);
            const auto e = even_cf(r);
            ASSERT_EQ(e.flavor(), Flavor::even);
            ASSERT_EQ(eval_cf(e), even_representative(r)) << r;
        }
}

TEST(EvenCf, ReversalGivesSameClass) {
    for (long long p = 3; p <= 601; p += 2)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const auto e = even_cf(R(q, p));
            std::vector<Integer> rev(e.entries().rbegin(), e.entries().rend());
            if (e.entries().back() < 0)
                for (auto& x : rev) x = -x;
            ASSERT_TRUE(schubert_equivalent(eval_cf(rev), R(q, p)));
        }
}

TEST(NearestEvenQuotient, PicksClosestEvenWithSmallerRemainder) {
    EXPECT_EQ(nearest_even_quotient(Integer(11), Integer(4)), 2);
    EXPECT_EQ(nearest_even_quotient(Integer(13), Integer(4)), 4);
    EXPECT_EQ(nearest_even_quotient(Integer(-5), Integer(2)), -2);
}

TEST(IsSymmetric, Examples) {
    EXPECT_FALSE(is_symmetric(ints({2, 2, -2, 2})));
    EXPECT_TRUE(is_symmetric(ints({2, -2})));
    EXPECT_TRUE(is_symmetric(ints({2, 2})));
    EXPECT_TRUE(is_symmetric(ints({3})));
    EXPECT_THROW(is_symmetric(ints({2, 0, 2})), InvalidInput);
    EXPECT_THROW(is_symmetric(std::vector<Integer>{}), InvalidInput);
}

TEST(IsSymmetric, AgreesWithArithmeticOracle) {
    // An expansion equal to its (negated) reverse evaluates to q/p with
    // q^2 = +-1 mod p, and conversely for even and standard expansions.
    for (long long p = 3; p <= 801; p += 2)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            const Rational r = R(q, p);
            const Integer sq = (Integer(q) * q) % p;
            const bool oracle = sq == 1 || sq == p - 1;
            ASSERT_EQ(is_symmetric(even_cf(r).entries()), oracle) << r;
            ASSERT_EQ(is_symmetric(standard_cf(r).entries()), oracle) << r;
        }
}
