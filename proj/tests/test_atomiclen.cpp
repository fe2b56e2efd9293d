#include "atomic/atomiclen.hpp"
#include "atomic/fixtures.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

using namespace atomic;

namespace {

/// <lambda - w(lambda), rho^vee> by reflecting lambda along a word, in root coordinates.
long long value_by_word(const RootSystem& sys, const Word& word, const RatVec& lambda)
{
    RatVec v = lambda;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = sys.reflect(v, *it);
    Rational s = 0;
    for (int i = 0; i < sys.rank(); ++i) s += lambda[i] - v[i];
    return floor_of(s);
}

/// Image set by walking every element of the group and evaluating on a reduced word.
std::set<long long> brute_image(const SystemPtr& sys, const WeightVec& lambda)
{
    std::set<long long> out;
    const RatVec l = lambda.root_coords(*sys);
    for (const auto& w : enumerate_group(sys)) out.insert(value_by_word(*sys, reduced_word(w), l));
    return out;
}

/// Every reduced word of w.
void reduced_words(const WeylElement& w, Word& suffix, std::vector<Word>& out)
{
    if (w.is_identity()) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
    }
    for (int i : descents(w)) {
        suffix.push_back(i);
        reduced_words(w.times_simple(i), suffix, out);
        suffix.pop_back();
    }
}

} // namespace

TEST(AtomicLength, AgreesWithRhoPairingOnWholeGroups)
{
    for (const char* t : {"A3", "B3", "C3", "D4", "G2"}) {
        const auto sys = build_root_system(t);
        const RatVec rho = sys->rho();
        for (const auto& w : enumerate_group(sys)) {
            EXPECT_EQ(atomic_length(w), value_by_word(*sys, reduced_word(w), rho)) << t;
            EXPECT_EQ(atomic_length(w), lambda_atomic_length(w, WeightVec::rho(*sys)));
        }
    }
}

TEST(AtomicLength, RankTwoImagesMatchTable)
{
    for (const auto& f : fixtures::image_sets()) {
        const auto sys = build_root_system(f.type);
        const auto rep = image_set(sys, WeightVec::from_fund(f.weight));
        EXPECT_EQ(rep.values, f.values) << f.type;
    }
}

TEST(AtomicLength, OrbitImageEqualsBruteForceImage)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(0, 3);
    for (const char* t : {"A3", "B3", "C3", "G2", "B2", "A4", "D4"}) {
        const auto sys = build_root_system(t);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> m(sys->rank());
            for (int& x : m) x = coord(rng);
            const auto lambda = WeightVec::from_fund(m);
            const auto rep = image_set(sys, lambda);
            const auto want = brute_image(sys, lambda);
            EXPECT_EQ(std::set<long long>(rep.values.begin(), rep.values.end()), want) << t;
            EXPECT_EQ(rep.max_value, *want.rbegin());
        }
    }
}

TEST(AtomicLength, OrbitSizeIsIndexOfStabiliser)
{
    const auto sys = build_root_system("B3");
    EXPECT_EQ(image_set(sys, WeightVec::from_fund({1, 0, 0})).orbit_size, 6u);
    EXPECT_EQ(image_set(sys, WeightVec::from_fund({0, 0, 1})).orbit_size, 8u);
    EXPECT_EQ(image_set(sys, WeightVec::from_fund({1, 1, 1})).orbit_size, 48u);
    EXPECT_EQ(image_set(sys, WeightVec::from_fund({0, 0, 0})).values, (std::vector<long long>{0}));
}

TEST(AtomicLength, ThreadCountDoesNotChangeResults)
{
    const auto sys = build_root_system("E6");
    OrbitOptions one, four;
    four.threads = 4;
    const auto a = image_set(sys, WeightVec::from_fund({1, 0, 1, 0, 0, 2}), one);
    const auto b = image_set(sys, WeightVec::from_fund({1, 0, 1, 0, 0, 2}), four);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.histogram, b.histogram);
    EXPECT_EQ(a.orbit_size, b.orbit_size);
}

TEST(AtomicLength, HistogramCountsOrbitPoints)
{
    const auto rep = image_set(build_root_system("A3"), WeightVec::from_fund({1, 1, 1}));
    std::uint64_t total = 0;
    for (const auto& [v, c] : rep.histogram) total += c;
    EXPECT_EQ(total, 24u);
    // Mahonian-like symmetry about L(w0)/2 from w -> w0 w
    for (const auto& [v, c] : rep.histogram) EXPECT_EQ(rep.histogram.at(rep.max_value - v), c);
}

TEST(AtomicLength, W0ClosedForms)
{
    for (char fam : {'A', 'B', 'C', 'D'})
        for (int n = fam == 'D' ? 4 : 2; n <= 8; ++n) {
            const auto sys = build_root_system(TypeLabel{fam, n, false});
            EXPECT_EQ(two_rho_rho_check(*sys), fixtures::classical_w0(fam, n)) << sys->name();
            EXPECT_EQ(atomic_length_w0(sys, WeightVec::rho(*sys)), fixtures::classical_w0(fam, n)) << sys->name();
        }
    for (const auto& f : fixtures::exceptional_w0()) {
        const auto sys = build_root_system(f.type);
        EXPECT_EQ(two_rho_rho_check(*sys), f.value);
        EXPECT_EQ(atomic_length(longest_element(sys)), f.value);
    }
}

TEST(AtomicLength, SimplyLacedSymmetryUnderInverse)
{
    for (const char* t : {"A4", "D4"}) {
        const auto sys = build_root_system(t);
        for (const auto& w : enumerate_group(sys)) EXPECT_EQ(atomic_length(w), atomic_length(inverse(w))) << t;
    }
    const auto g2 = build_root_system("G2");
    EXPECT_EQ(atomic_length(evaluate(g2, {2, 1})), 3);
    EXPECT_EQ(atomic_length(evaluate(g2, {1, 2})), 5);
}

TEST(AtomicLength, AntiSymmetryWithLongestElement)
{
    for (const char* t : {"A3", "B3", "G2", "D4"}) {
        const auto sys = build_root_system(t);
        const auto w0 = longest_element(sys);
        for (const auto& m : {std::vector<int>(sys->rank(), 1), std::vector<int>(sys->rank(), 2)}) {
            const auto lambda = WeightVec::from_fund(m);
            const long long top = lambda_atomic_length(w0, lambda);
            for (const auto& w : enumerate_group(sys)) EXPECT_EQ(lambda_atomic_length(w0 * w, lambda), top - lambda_atomic_length(w, lambda));
        }
    }
}

TEST(AtomicLength, MonotoneAlongWeakOrders)
{
    const auto sys = build_root_system("A3");
    const auto lambda = WeightVec::from_fund({2, 0, 1});
    for (const auto& w : enumerate_group(sys))
        for (int i = 1; i <= 3; ++i) {
            const auto right = w.times_simple(i);
            if (length(right) > length(w)) EXPECT_LE(lambda_atomic_length(w, lambda), lambda_atomic_length(right, lambda));
            const auto left = w.simple_times(i);
            if (length(left) > length(w)) EXPECT_LE(lambda_atomic_length(w, lambda), lambda_atomic_length(left, lambda));
            if (length(right) > length(w)) EXPECT_LT(atomic_length(w), atomic_length(right));
        }
}

TEST(AtomicLength, ParabolicRestrictionMatchesSubsystem)
{
    // L(w) for w in W_I equals the atomic length computed inside the parabolic root system of I.
    for (const char* t : {"A3", "B3"}) {
        const auto sys = build_root_system(t);
        for (const std::vector<int>& I : {std::vector<int>{1, 2}, std::vector<int>{2, 3}, std::vector<int>{1, 3}}) {
            IntMatrix sub(I.size(), std::vector<int>(I.size()));
            for (std::size_t a = 0; a < I.size(); ++a)
                for (std::size_t b = 0; b < I.size(); ++b) sub[a][b] = sys->cartan()[I[a] - 1][I[b] - 1];
            const auto subsys = std::make_shared<const RootSystem>(sub);
            for (const auto& w : enumerate_subgroup(parabolic_subgroup(sys, I))) {
                Word local;
                for (int i : reduced_word(w)) local.push_back(static_cast<int>(std::find(I.begin(), I.end(), i) - I.begin()) + 1);
                EXPECT_EQ(atomic_length(w), atomic_length(evaluate(subsys, local))) << t;
            }
        }
    }
}

TEST(AtomicLength, RestrictionFailsForNonParabolicSubgroup)
{
    const auto sys = build_root_system("A3");
    const ReflectionSubgroup A(sys, {evaluate(sys, {1, 2, 1}), WeylElement::simple(sys, 3)});
    const auto w = evaluate(sys, {1, 2, 1, 3});
    EXPECT_EQ(atomic_length(w), 7);
    long long la = 0;
    for (const auto& r : inversion_set(w))
        if (A.contains_root(r)) la += height(r);
    EXPECT_EQ(la, 5);
}

TEST(LambdaInversionSet, ExampleWordsInA4)
{
    const auto sys = build_root_system("A4");
    const auto lambda = WeightVec::from_fund({1, 2, 3, 4});
    for (const auto& f : fixtures::lambda_inversion_sets()) {
        const auto got = lambda_inversion_set(sys, f.word, lambda);
        std::multiset<std::pair<int, RootVec>> a, b;
        for (const auto& e : got.entries) {
            EXPECT_EQ(e.m, e.j);
            a.insert({e.j, e.root});
        }
        for (const auto& e : f.entries) {
            RootVec r(4, 0);
            for (int k = e.a; k < e.b; ++k) r[k - 1] = 1;
            b.insert({e.j, r});
        }
        EXPECT_EQ(a, b);
    }
}

TEST(LambdaInversionSet, SumIdentityOverAllReducedWordsOfA4)
{
    const auto sys = build_root_system("A4");
    const auto lambda = WeightVec::from_fund({1, 3, 0, 2});
    const RatVec l = lambda.root_coords(*sys);
    std::size_t words = 0;
    for (const auto& w : enumerate_group(sys)) {
        std::vector<Word> all;
        Word suffix;
        reduced_words(w, suffix, all);
        const RatVec wl = w.act(l);
        RatVec diff(4);
        for (int i = 0; i < 4; ++i) diff[i] = l[i] - wl[i];
        for (const auto& word : all) {
            ASSERT_EQ(evaluate(sys, word), w);
            const auto s = lambda_inversion_set(sys, word, lambda);
            EXPECT_EQ(s.sum(4), diff);
            EXPECT_EQ(s.total_height(), lambda_atomic_length(w, lambda));
            ++words;
        }
    }
    EXPECT_GT(words, 120u);
}

TEST(Ideal, C3Examples)
{
    const auto sys = build_root_system("C3");
    for (const auto& f : fixtures::c3_ideal()) {
        const auto r = is_ideal(sys, WeightVec::from_fund(f.weight));
        EXPECT_EQ(r.ideal, f.ideal);
        ASSERT_TRUE(r.report.has_value());
        EXPECT_EQ(r.report->max_value, f.max);
    }
}

TEST(Ideal, NoCoordinateOneIsRejectedWithoutTraversal)
{
    const auto r = is_ideal(build_root_system("C3"), WeightVec::from_fund({2, 2, 3}));
    EXPECT_FALSE(r.ideal);
    EXPECT_TRUE(r.fast_rejected);
}

TEST(Ideal, MinusculeWeightsAreIdeal)
{
    const std::pair<const char*, std::size_t> counts[] = {{"A3", 3}, {"B3", 1}, {"C3", 1}, {"D4", 3}, {"D5", 3}, {"E6", 2}, {"E7", 1}};
    for (const auto& [t, c] : counts) {
        const auto sys = build_root_system(t);
        const auto ms = minuscule_weights(sys);
        EXPECT_EQ(ms.size(), c) << t;
        for (const auto& m : ms) {
            EXPECT_TRUE(is_minuscule(*sys, m));
            EXPECT_TRUE(is_ideal(sys, m).ideal) << t;
        }
    }
    EXPECT_TRUE(minuscule_weights(build_root_system("E8")).empty());
}

TEST(Ideal, MinusculeTableAgreesWithDefinition)
{
    // Minuscule: <lambda, alpha^vee> in {0, 1} for every positive root.
    for (const char* t : {"A4", "B4", "C4", "D5", "G2", "F4"}) {
        const auto sys = build_root_system(t);
        std::set<RatVec> table;
        for (const auto& m : minuscule_weights(sys)) table.insert(m.fund);
        for (int i = 1; i <= sys->rank(); ++i) {
            const auto w = WeightVec::fundamental(*sys, i);
            bool minus = true;
            for (const auto& a : sys->positive_roots()) minus = minus && coroot_value(*sys, w, a) <= Rational(1);
            EXPECT_EQ(minus, table.count(w.fund) == 1) << t << " " << i;
        }
    }
}

TEST(AtomicLength, NonDominantWeightIsRejected)
{
    const auto sys = build_root_system("A2");
    try {
        image_set(sys, WeightVec::from_fund({1, -1}));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDominant);
    }
}

TEST(AtomicLength, OrbitCapIsEnforced)
{
    OrbitOptions opt;
    opt.cap = 100;
    try {
        image_set(build_root_system("D5"), WeightVec::from_fund({1, 1, 1, 1, 1}), opt);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OrbitTooLarge);
    }
}

TEST(ImageReport, FinalizeRecomputesDerivedFields)
{
    ImageReport r;
    r.values = {5, 0, 3, 1, 3};
    r.finalize();
    EXPECT_EQ(r.values, (std::vector<long long>{0, 1, 3, 5}));
    EXPECT_EQ(r.max_value, 5);
    EXPECT_EQ(r.missing, (std::vector<long long>{2, 4}));
}
