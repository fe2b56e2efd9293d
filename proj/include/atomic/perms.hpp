#pragma once

#include "atomic/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace atomic {

/// One-line notation w_1 ... w_n of a bijection of {1..n}.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line))
    {
        std::vector<int> s = w_;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != static_cast<int>(i) + 1) throw Error(ErrorKind::InvalidPermutation, "not a permutation of 1..n");
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    static Permutation longest(int n)
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int k) const { return w_[k - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const
    {
        std::vector<int> v(w_.size());
        for (int k = 1; k <= size(); ++k) v[w_[k - 1] - 1] = k;
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

inline long long cosine(const Permutation& w)
{
    long long s = 0;
    for (int k = 1; k <= w.size(); ++k) s += static_cast<long long>(k) * w(k);
    return s;
}

inline long long entropy(const Permutation& w)
{
    long long s = 0;
    for (int k = 1; k <= w.size(); ++k) s += static_cast<long long>(k - w(k)) * (k - w(k));
    return s;
}

/// Position pairs (i, j), i < j, with w(i) > w(j).
inline std::vector<std::pair<int, int>> inversions(const Permutation& w)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) out.emplace_back(i, j);
    return out;
}

inline long long invsum(const Permutation& w)
{
    long long s = 0;
    for (auto [i, j] : inversions(w)) s += j - i;
    return s;
}

inline long long ninvsum(const Permutation& w)
{
    long long s = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) < w(j)) s += j - i;
    return s;
}

/// e_a - e_b in simple-root coordinates of A_{n-1}.
inline RootVec ambient_difference(int a, int b, int n)
{
    RootVec v(n - 1, 0);
    const int lo = std::min(a, b), hi = std::max(a, b);
    const int sign = a < b ? 1 : -1;
    for (int k = lo; k < hi; ++k) v[k - 1] = sign;
    return v;
}

/// The element of W(A_{n-1}) sending e_k to e_{w^{-1}(k)}; its inversion set
/// corresponds to the position inversions of w under e_ij <-> (i, j).
inline WeylElement to_weyl(const Permutation& w)
{
    const int n = w.size();
    if (n < 2) throw Error(ErrorKind::InvalidPermutation, "need n >= 2");
    const auto sys = build_root_system(TypeLabel{'A', n - 1, false});
    const Permutation inv = w.inverse();
    std::vector<int> m((n - 1) * (n - 1));
    for (int i = 1; i < n; ++i) {
        const RootVec col = ambient_difference(inv(i), inv(i + 1), n);
        for (int r = 0; r < n - 1; ++r) m[r * (n - 1) + i - 1] = col[r];
    }
    return WeylElement(sys, std::move(m));
}

/// x is adequate when its coordinates are distinct integers in [1, n].
inline bool is_adequate(const std::vector<int>& x, int n)
{
    if (static_cast<int>(x.size()) != n) return false;
    std::set<int> s;
    for (int v : x) {
        if (v < 1 || v > n) return false;
        s.insert(v);
    }
    return static_cast<int>(s.size()) == n;
}

/// |w(x) - x|^2 where w acts on coordinate values.
inline long long permutohedron_distance_sq(const Permutation& w, const std::vector<int>& x)
{
    if (!is_adequate(x, w.size())) throw Error(ErrorKind::NotAdequate, "point is not adequate");
    long long s = 0;
    for (int v : x) s += static_cast<long long>(w(v) - v) * (w(v) - v);
    return s;
}

/// Calls f on every permutation of 1..n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

struct CosineProbe {
    std::vector<long long> attained;
    std::vector<long long> gaps;        ///< unattained values in [0, min(bound, certified_max)]
    long long certified_max = 0;        ///< no larger symmetric group reaches a value <= this
};

/// Cosine values over S_1..S_max_n within [0, bound].
inline CosineProbe cosine_range_probe(int max_n, long long bound)
{
    if (max_n < 1 || max_n > 10) throw Error(ErrorKind::SizeTooLarge, "max_n must lie in 1..10");
    std::set<long long> vals;
    for (int n = 1; n <= max_n; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            const long long c = cosine(w);
            if (c <= bound) vals.insert(c);
        });
    CosineProbe p;
    p.attained.assign(vals.begin(), vals.end());
    const long long m = max_n + 1;
    p.certified_max = m * (m + 1) * (m + 2) / 6 - 1;
    for (long long v = 0; v <= std::min(bound, p.certified_max); ++v)
        if (!vals.count(v)) p.gaps.push_back(v);
    return p;
}

} // namespace atomic
