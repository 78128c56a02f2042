#include <bridgemap/bridgemap.hpp>

#include <gtest/gtest.h>

using namespace bridgemap;

TEST(U1Family, GenusThreeWitness) {
    EXPECT_EQ(u1_family_cf(2, 1, 0), to_integers({2, 2, 4, -2, -4, -2}));
    const KnotClass k(u1_family(2, 1, 0));
    EXPECT_EQ(k.genus(), 3);
    EXPECT_TRUE(has_unknotting_number_one(k));
    EXPECT_TRUE(epimorphism_exists(k, KnotClass(Rational(2, 5))));
}

TEST(U1Family, GenusAndCrossing) {
    for (std::int64_t a = 2; a <= 8; a += 2)
        for (int sign : {1, -1}) {
            const KnotClass target(u1_family_target(a, sign));
            EXPECT_EQ(target.genus(), 1);
            EXPECT_TRUE(has_unknotting_number_one(target));
            for (std::int64_t n : {0, 1}) {
                const KnotClass k(u1_family(a, sign, n));
                EXPECT_EQ(k.genus(), n == 0 ? 3 : 7) << a << " " << sign << " " << n;
                EXPECT_TRUE(has_unknotting_number_one(k));
                if (n == 1) {
                    EXPECT_EQ(k.crossing(), sign > 0 ? 7 * a + 13 : 7 * a + 2);
                }
            }
        }
}

TEST(U1Family, MapsOntoTarget) {
    for (std::int64_t a : {2, 4})
        for (int sign : {1, -1})
            for (std::int64_t n : {0, 1})
                EXPECT_TRUE(epimorphism_exists(KnotClass(u1_family(a, sign, n)), KnotClass(u1_family_target(a, sign))))
                    << a << " " << sign << " " << n;
}

TEST(U1Family, RejectsBadParameters) {
    EXPECT_THROW(u1_family(3, 1, 1), InvalidInput);
    EXPECT_THROW(u1_family(0, 1, 1), InvalidInput);
    EXPECT_THROW(u1_family(2, 0, 1), InvalidInput);
    EXPECT_THROW(u1_family(2, 1, -1), InvalidInput);
}

TEST(GgFamilies, FixedSourceGenus) {
    for (std::int64_t g = 3; g <= 6; ++g) {
        const auto pair = gg_families(g, FamilyKind::fixed_source_genus);
        const KnotClass source(pair.source), target(pair.target);
        EXPECT_EQ(target, KnotClass(Rational(2, 5)));
        EXPECT_EQ(source.genus(), g);
        EXPECT_TRUE(has_unknotting_number_one(source));
        EXPECT_TRUE(has_unknotting_number_one(target));
        EXPECT_TRUE(epimorphism_exists(source, target)) << g;
        EXPECT_EQ(eval_cf(pair.source_cf), pair.source);
    }
    EXPECT_THROW(gg_families(2, FamilyKind::fixed_source_genus), InvalidInput);
}

TEST(GgFamilies, FixedTargetGenus) {
    for (std::int64_t g = 1; g <= 3; ++g) {
        const auto pair = gg_families(g, FamilyKind::fixed_target_genus);
        const KnotClass source(pair.source), target(pair.target);
        EXPECT_EQ(target.genus(), g);
        EXPECT_TRUE(has_unknotting_number_one(source));
        EXPECT_TRUE(has_unknotting_number_one(target));
        EXPECT_TRUE(epimorphism_exists(source, target)) << g;
    }
}
