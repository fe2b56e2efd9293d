#include "atomic/atomiclen.hpp"
#include "atomic/perms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace atomic;

namespace {

long long binom3(long long m) { return m * (m - 1) * (m - 2) / 6; }

} // namespace

TEST(Perms, RejectsNonPermutations)
{
    EXPECT_THROW(Permutation({1, 1, 2}), Error);
    EXPECT_THROW(Permutation({0, 1}), Error);
    EXPECT_NO_THROW(Permutation({2, 3, 1}));
}

TEST(Perms, SmallValues)
{
    const auto id = Permutation::identity(4);
    EXPECT_EQ(entropy(id), 0);
    EXPECT_EQ(invsum(id), 0);
    EXPECT_EQ(cosine(id), 30);
    const auto w0 = Permutation::longest(4);
    EXPECT_EQ(invsum(w0), 10);
    EXPECT_EQ(ninvsum(w0), 0);
    EXPECT_EQ(entropy(w0), 20);
}

TEST(Perms, IdentitiesExhaustiveUpToSix)
{
    for (int n = 1; n <= 6; ++n) {
        const long long cw0 = cosine(Permutation::longest(n));
        long long cos_total = 0, count = 0;
        for_each_permutation(n, [&](const Permutation& w) {
            EXPECT_EQ(entropy(w), 2 * invsum(w));
            EXPECT_EQ(cosine(w), cw0 + ninvsum(w));
            EXPECT_EQ(invsum(w) + ninvsum(w), binom3(n + 1));
            if (n >= 2) EXPECT_EQ(invsum(w), atomic_length(to_weyl(w)));
            cos_total += cosine(w);
            ++count;
        });
        // average cosine is n (n+1)^2 / 4
        EXPECT_EQ(4 * cos_total, count * n * (n + 1) * (n + 1));
    }
}

TEST(Perms, ToWeylMatchesInversionsAndWords)
{
    const auto a2 = build_root_system("A2");
    EXPECT_EQ(to_weyl(Permutation({1, 3, 2})), WeylElement::simple(a2, 2));
    EXPECT_EQ(atomic_length(to_weyl(Permutation({2, 3, 1}))), 3);
    for_each_permutation(5, [&](const Permutation& w) {
        const auto inv = inversion_set(to_weyl(w));
        std::set<RootVec> got(inv.begin(), inv.end()), want;
        for (auto [i, j] : inversions(w)) want.insert(ambient_difference(i, j, 5));
        EXPECT_EQ(got, want);
    });
    // the map reverses products: to_weyl(u) to_weyl(v) = to_weyl(v o u)
    const Permutation u({2, 3, 1, 4}), v({1, 4, 2, 3});
    std::vector<int> uv;
    for (int k = 1; k <= 4; ++k) uv.push_back(v(u(k)));
    EXPECT_EQ(to_weyl(u) * to_weyl(v), to_weyl(Permutation(uv)));
}

TEST(Perms, PermutohedronDistanceEqualsEntropy)
{
    std::mt19937 rng(43);
    std::vector<int> x(6);
    std::iota(x.begin(), x.end(), 1);
    std::vector<int> w = x;
    for (int trial = 0; trial < 1000; ++trial) {
        std::shuffle(w.begin(), w.end(), rng);
        std::shuffle(x.begin(), x.end(), rng);
        const Permutation p(w);
        EXPECT_EQ(permutohedron_distance_sq(p, x), entropy(p));
    }
    EXPECT_EQ(permutohedron_distance_sq(Permutation::longest(4), {1, 2, 3, 4}), 20);
    try {
        permutohedron_distance_sq(Permutation::identity(3), {1, 1, 2});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAdequate);
    }
}

TEST(Perms, CosineProbe)
{
    const auto p = cosine_range_probe(8, 30);
    EXPECT_TRUE(std::find(p.gaps.begin(), p.gaps.end(), 16) != p.gaps.end());
    EXPECT_TRUE(std::find(p.attained.begin(), p.attained.end(), 16) == p.attained.end());
    EXPECT_EQ(p.certified_max, 164);
    EXPECT_EQ(cosine_range_probe(1, 1).attained, (std::vector<long long>{1}));
    EXPECT_THROW(cosine_range_probe(11, 10), Error);
}
