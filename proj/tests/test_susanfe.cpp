#include "atomic/susanfe.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace atomic;

namespace {

std::vector<int> tail_indices(int n)
{
    std::vector<int> I;
    for (int i = 2; i <= n; ++i) I.push_back(i);
    return I;
}

} // namespace

TEST(Susanfe, HighestRootReflectionsAreSusanfe)
{
    for (const char* t : {"A4", "B3", "C4", "D5", "E6", "F4", "G2"}) {
        const auto sys = build_root_system(t);
        EXPECT_TRUE(susanfe_check(WeylElement::reflection(sys, sys->highest_root())).is_susanfe) << t;
    }
}

TEST(Susanfe, DefinitionOnWholeGroup)
{
    const auto sys = build_root_system("B3");
    for (const auto& w : enumerate_group(sys)) {
        const auto r = susanfe_check(w);
        std::set<RootVec> moved;
        for (const auto& a : sys->positive_roots())
            if (w.act(a) != a) moved.insert(a);
        EXPECT_EQ(r.is_susanfe, moved == std::set<RootVec>(r.inversions.begin(), r.inversions.end()));
    }
    EXPECT_TRUE(susanfe_check(WeylElement::identity(sys)).is_susanfe);
    EXPECT_FALSE(susanfe_check(evaluate(sys, {1, 2})).is_susanfe);
}

TEST(Susanfe, SpecialReflectionsAndConstants)
{
    for (char fam : {'A', 'B', 'C', 'D'})
        for (int n = fam == 'D' ? 4 : 2; n <= 7; ++n) {
            const auto sys = build_root_system(TypeLabel{fam, n, false});
            const auto sr = special_reflection(sys);
            EXPECT_TRUE(is_reflection(sr.t));
            EXPECT_TRUE(susanfe_check(sr.t).is_susanfe) << sys->name();
            EXPECT_EQ(sr.K, special_constant_formula(fam, n)) << sys->name();
            EXPECT_EQ(sr.I, tail_indices(n));
        }
    // A, C, D use the highest root; B uses the short root e_1.
    const auto b4 = build_root_system("B4");
    EXPECT_EQ(reflection_root(special_reflection(b4).t), (RootVec{1, 1, 1, 1}));
    const auto c4 = build_root_system("C4");
    EXPECT_EQ(reflection_root(special_reflection(c4).t), c4->highest_root());
    const auto d5 = build_root_system("D5");
    EXPECT_EQ(reflection_root(special_reflection(d5).t), d5->highest_root());
}

TEST(Susanfe, ConstantIsTheRestrictedLengthOfT)
{
    // For C the root of t is orthogonal to Phi_I, so N(t) misses Phi_I and K is the full atomic length.
    for (const char* t : {"C4"}) {
        const auto sys = build_root_system(t);
        const auto sr = special_reflection(sys);
        EXPECT_EQ(sr.K, atomic_length(sr.t)) << t;
    }
    const auto b4 = build_root_system("B4");
    EXPECT_EQ(special_reflection(b4).K, 28);
}

TEST(Susanfe, CorollaryIdentityOnA3AndB3Setups)
{
    for (const char* t : {"A3", "B3", "C3", "A4"}) {
        const auto sys = build_root_system(t);
        const auto sr = special_reflection(sys);
        const auto P = parabolic_subgroup(sys, sr.I);
        const auto B = conjugate_subgroup(sr.t, P);
        EXPECT_TRUE(susanfe_decomposition_exhaustive(sr.t, B)) << t;
    }
}

TEST(Susanfe, SpecialReflectionIsUtopicForTheParabolic)
{
    for (const char* t : {"A3", "B3", "D4"}) {
        const auto sys = build_root_system(t);
        const auto sr = special_reflection(sys);
        EXPECT_TRUE(utopic_check(sr.t, parabolic_subgroup(sys, sr.I))) << t;
    }
}

TEST(Susanfe, ShiftedImageIsContainedInTheImage)
{
    // L(W_I) u (L(W_I) + K_n) lies in L(W) in every rank, even where the union has gaps.
    for (const char* t : {"A3", "B3", "C3", "D4", "B4", "D5"}) {
        const auto sys = build_root_system(t);
        const auto sr = special_reflection(sys);
        const auto image = image_set(sys, WeightVec::rho(*sys));
        const std::set<long long> full(image.values.begin(), image.values.end());
        const auto P = parabolic_subgroup(sys, sr.I);
        for (const auto& w : enumerate_subgroup(P)) {
            EXPECT_TRUE(full.count(atomic_length(w)));
            EXPECT_TRUE(full.count(atomic_length(w) + sr.K)) << t;
        }
    }
}

TEST(Susanfe, InductionReconstructsDirectImages)
{
    for (const char* t : {"A3", "A4", "A5", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "D6"}) {
        const auto sys = build_root_system(t);
        const auto ind = surjectivity_susanfe_induction(sys);
        const auto direct = image_set(sys, WeightVec::rho(*sys));
        EXPECT_EQ(ind.image.values, direct.values) << t;
        EXPECT_TRUE(ind.image.surjective()) << t;
        if (!ind.base_case) EXPECT_LE(ind.K, ind.b_prev + 1) << t;
    }
}

TEST(Susanfe, ListsEverySusanfeReflection)
{
    const auto sys = build_root_system("B4");
    const auto all = susanfe_reflections(sys);
    EXPECT_FALSE(all.empty());
    bool has_theta = false;
    for (const auto& [t, len] : all) {
        EXPECT_TRUE(is_reflection(t));
        if (reflection_root(t) == sys->highest_root()) has_theta = true;
    }
    EXPECT_TRUE(has_theta);
}

TEST(Susanfe, UnsupportedFamiliesAreRejected)
{
    try {
        special_reflection(build_root_system("E6"));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedType);
    }
}
