#pragma once

#include <string>
#include <vector>

namespace atomic::fixtures {

struct ImageFixture {
    std::string type;
    std::vector<int> weight;
    std::vector<long long> values;
};

/// Image sets of the atomic length on rank-2 groups and of two non-ideal C3 weights.
inline const std::vector<ImageFixture>& image_sets()
{
    static const std::vector<ImageFixture> t = {
        {"A2", {1, 1}, {0, 1, 3, 4}},
        {"B2", {1, 1}, {0, 1, 3, 4, 6, 7}},
        {"G2", {1, 1}, {0, 1, 3, 5, 8, 11, 13, 15, 16}},
        {"C3", {1, 2, 1}, {0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24, 25, 26, 28, 29, 30}},
        {"C3", {1, 1, 2}, {0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25, 27, 28, 29, 30, 31}},
    };
    return t;
}

struct W0Fixture {
    std::string type;
    long long value;
};

inline const std::vector<W0Fixture>& exceptional_w0()
{
    static const std::vector<W0Fixture> t = {{"E6", 156}, {"E7", 399}, {"E8", 1240}, {"F4", 110}, {"G2", 16}};
    return t;
}

/// L(w0) = <2 rho, rho^vee> for the classical families.
inline long long classical_w0(char family, long long n)
{
    switch (family) {
    case 'A': return n * (n + 1) * (n + 2) / 6;
    case 'B':
    case 'C': return n * (n + 1) * (4 * n - 1) / 6;
    case 'D': return n * (n - 1) * (2 * n - 1) / 3;
    default: return -1;
    }
}

struct AffineRow {
    std::vector<int> word;
    std::vector<int> finite_word;
    std::vector<int> beta;
    std::vector<int> gamma;
    long long value;
};

/// First values of L_{Lambda_0} in type A2~ with w = tau_beta wbar = wbar tau_gamma.
inline const std::vector<AffineRow>& affine_a2_rows()
{
    static const std::vector<AffineRow> t = {
        {{}, {}, {0, 0}, {0, 0}, 0},
        {{0}, {2, 1, 2}, {1, 1}, {-1, -1}, 1},
        {{1, 0}, {2, 1}, {0, 1}, {-1, -1}, 2},
        {{2, 0}, {1, 2}, {1, 0}, {-1, -1}, 2},
        {{2, 1, 0}, {1}, {0, -1}, {-1, -1}, 4},
        {{1, 2, 0}, {2}, {-1, 0}, {-1, -1}, 4},
        {{2, 1, 2, 0}, {}, {-1, -1}, {-1, -1}, 5},
        {{0, 2, 1, 0}, {1, 2}, {2, 1}, {-1, -2}, 6},
        {{0, 1, 2, 0}, {2, 1}, {1, 2}, {-2, -1}, 6},
        {{0, 2, 1, 2, 0}, {1, 2, 1}, {2, 2}, {-2, -2}, 8},
        {{1, 0, 2, 1, 0}, {2}, {-1, 1}, {-1, -2}, 9},
        {{2, 0, 1, 2, 0}, {1}, {1, -1}, {-2, -1}, 9},
    };
    return t;
}

struct ShiFixture {
    std::string name;
    std::string type;
    std::vector<std::vector<long long>> pyramid;
};

/// Shi vectors of the special reflections, rows by height.
inline const std::vector<ShiFixture>& shi_pyramids()
{
    static const std::vector<ShiFixture> t = {
        {"A4 t", "A4", {{-1, 0, 0, -1}, {-1, 0, -1}, {-1, -1}, {-1}}},
        {"B4 t", "B4", {{0, -1, 0, 0}, {-1, -1, 0}, {-1, -1, 0}, {-1, -1}, {-1, -1}, {-1}, {-1}}},
        {"B4 t'", "B4", {{-1, 0, 0, 0}, {-1, 0, 0}, {-1, 0, 0}, {-1, 0}, {-1, 0}, {-1}, {-1}}},
        {"C4 t", "C4", {{-1, 0, 0, 0}, {-1, 0, 0}, {-1, 0, 0}, {-1, 0}, {-1, 0}, {-1}, {-1}}},
    };
    return t;
}

struct LambdaEntry {
    int j;
    int a, b;   ///< the root e_a - e_b of A4
};

struct LambdaInversionFixture {
    std::vector<int> word;
    std::vector<LambdaEntry> entries;
};

/// The lambda-inversion sets of one A4 element for two of its reduced words.
inline const std::vector<LambdaInversionFixture>& lambda_inversion_sets()
{
    static const std::vector<LambdaInversionFixture> t = {
        {{1, 2, 1, 3, 4, 3}, {{1, 1, 2}, {1, 2, 3}, {2, 1, 3}, {3, 1, 4}, {3, 4, 5}, {4, 1, 5}}},
        {{2, 1, 4, 2, 3, 4}, {{1, 1, 3}, {2, 2, 3}, {2, 1, 2}, {3, 1, 5}, {4, 1, 4}, {4, 4, 5}}},
    };
    return t;
}

/// The 3-cores of size at most 5.
inline const std::vector<std::vector<int>>& three_cores_up_to_5()
{
    static const std::vector<std::vector<int>> t = {{}, {1}, {2}, {1, 1}, {3, 1}, {2, 1, 1}, {3, 1, 1}};
    return t;
}

struct IdealFixture {
    std::vector<int> weight;
    bool ideal;
    long long max;
};

inline const std::vector<IdealFixture>& c3_ideal()
{
    static const std::vector<IdealFixture> t = {{{2, 1, 1}, true, 27}, {{1, 2, 1}, false, 30}, {{1, 1, 2}, false, 31}};
    return t;
}

} // namespace atomic::fixtures
