#pragma once

#include "atomic/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

namespace atomic {

/// Sum of heights over N(w).
inline long long atomic_length(const WeylElement& w)
{
    long long s = 0;
    for (const auto& b : w.system()->positive_roots()) {
        const RootVec img = w.act(b);
        if (!is_positive(img)) s -= height(img);
    }
    return s;
}

inline void require_dominant(const WeightVec& lambda)
{
    if (!lambda.integral()) throw Error(ErrorKind::NotDominant, "weight is not integral");
    if (!lambda.dominant()) throw Error(ErrorKind::NotDominant, "weight has a negative fundamental coordinate");
}

/// <lambda - w(lambda), rho^vee>.
inline long long lambda_atomic_length(const WeylElement& w, const WeightVec& lambda)
{
    const auto& sys = *w.system();
    sys.check_dim(lambda.fund.size());
    require_dominant(lambda);
    const RatVec l = lambda.root_coords(sys);
    const RatVec wl = w.act(l);
    Rational s = 0;
    for (int i = 0; i < sys.rank(); ++i) s += l[i] - wl[i];
    return floor_of(s);
}

struct LambdaInversionEntry {
    int j;          ///< simple index of the letter
    int k;          ///< occurrence number of s_j in the word, from 1
    RootVec root;   ///< prefix_{j,k}(alpha_j)
    long long m;    ///< coefficient m_j of lambda

    RatVec scaled() const
    {
        RatVec v;
        for (int x : root) v.push_back(Rational(m) * x);
        return v;
    }
};

struct LambdaInversionSet {
    std::vector<LambdaInversionEntry> entries;
    Word source_word;

    RatVec sum(int rank) const
    {
        RatVec s(rank, Rational(0));
        for (const auto& e : entries)
            for (int i = 0; i < rank; ++i) s[i] += Rational(e.m) * e.root[i];
        return s;
    }

    long long total_height() const
    {
        long long h = 0;
        for (const auto& e : entries) h += e.m * height(e.root);
        return h;
    }
};

/// Multiset {m_j * w_{j,k}(alpha_j)} for a reduced word, grouped by j then k.
inline LambdaInversionSet lambda_inversion_set(const SystemPtr& sys, const Word& word, const WeightVec& lambda)
{
    sys->check_dim(lambda.fund.size());
    require_dominant(lambda);
    const auto roots = inversion_set_from_word(sys, word);
    const auto m = lambda.integer_fund();
    LambdaInversionSet out;
    out.source_word = word;
    std::vector<int> seen(sys->rank() + 1, 0);
    for (std::size_t p = 0; p < word.size(); ++p) {
        const int j = word[p];
        out.entries.push_back({j, ++seen[j], roots[p], m[j - 1]});
    }
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const auto& a, const auto& b) { return a.j < b.j; });
    return out;
}

struct ImageReport {
    std::vector<long long> values;
    long long max_value = 0;
    std::vector<long long> missing;
    std::uint64_t orbit_size = 0;
    std::map<long long, std::uint64_t> histogram;

    bool surjective() const { return missing.empty(); }

    /// Fill max_value and missing from values.
    void finalize()
    {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        max_value = values.empty() ? 0 : values.back();
        missing.clear();
        std::size_t k = 0;
        for (long long v = 0; v <= max_value; ++v) {
            while (k < values.size() && values[k] < v) ++k;
            if (k == values.size() || values[k] != v) missing.push_back(v);
        }
    }
};

struct OrbitOptions {
    std::uint64_t cap = std::uint64_t(1) << 27;
    unsigned threads = 1;
};

namespace detail {

/// Packs a small integer vector into 64 bits, `bits` per coordinate.
struct Packer {
    int n;
    int bits;
    long long offset;

    std::uint64_t pack(const long long* v) const
    {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i) k = (k << bits) | static_cast<std::uint64_t>(v[i] + offset);
        return k;
    }

    void unpack(std::uint64_t k, long long* v) const
    {
        const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
        for (int i = n - 1; i >= 0; --i) {
            v[i] = static_cast<long long>(k & mask) - offset;
            k >>= bits;
        }
    }
};

template <class Key, class Encode, class Decode>
ImageReport orbit_depths(const IntMatrix& cartan, const std::vector<long long>& start, const std::vector<long long>& weight,
                         const OrbitOptions& opt, long long max_depth, Encode encode, Decode decode)
{
    const int n = static_cast<int>(start.size());
    ImageReport rep;
    std::map<long long, std::vector<Key>> buckets;
    buckets[0].push_back(encode(start.data()));
    const unsigned threads = std::max(1u, opt.threads);
    auto expand = [&](const std::vector<Key>& level, std::size_t lo, std::size_t hi, long long depth,
                      std::map<long long, std::vector<Key>>& out) {
        std::vector<long long> mu(n), nu(n);
        for (std::size_t p = lo; p < hi; ++p) {
            decode(level[p], mu.data());
            for (int i = 0; i < n; ++i) {
                const long long c = mu[i];
                if (c <= 0) continue;
                const long long next = depth + c * weight[i];
                if (max_depth >= 0 && next > max_depth) continue;
                for (int j = 0; j < n; ++j) nu[j] = mu[j] - c * cartan[j][i];
                out[next].push_back(encode(nu.data()));
            }
        }
    };
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        const long long depth = node.key();
        std::vector<Key>& level = node.mapped();
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        rep.values.push_back(depth);
        rep.histogram[depth] = level.size();
        rep.orbit_size += level.size();
        if (rep.orbit_size > opt.cap)
            throw Error(ErrorKind::OrbitTooLarge, "orbit exceeds cap of " + std::to_string(opt.cap) + " weights");
        if (threads == 1 || level.size() < 4096) {
            expand(level, 0, level.size(), depth, buckets);
            continue;
        }
        std::vector<std::map<long long, std::vector<Key>>> partial(threads);
        {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (level.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t lo = std::min(level.size(), t * chunk);
                const std::size_t hi = std::min(level.size(), lo + chunk);
                pool.emplace_back([&, lo, hi, t] { expand(level, lo, hi, depth, partial[t]); });
            }
        }
        for (auto& part : partial)
            for (auto& [d, keys] : part) {
                auto& dst = buckets[d];
                dst.insert(dst.end(), keys.begin(), keys.end());
            }
    }
    rep.finalize();
    return rep;
}

} // namespace detail

/// Depths of the orbit W*mu0 explored from a dominant mu0 in fundamental
/// coordinates; an edge mu -> s_i(mu) is taken when <mu, alpha_i^vee> > 0 and
/// costs <mu, alpha_i^vee> * weight[i]. `coord_bound` bounds every |coordinate|
/// over the orbit (0 when unknown); `max_depth` < 0 means unbounded.
inline ImageReport orbit_image(const IntMatrix& cartan, const std::vector<long long>& mu0, const std::vector<long long>& weight,
                               const OrbitOptions& opt = {}, long long coord_bound = 0, long long max_depth = -1)
{
    const int n = static_cast<int>(mu0.size());
    if (coord_bound > 0) {
        int bits = 1;
        while ((1LL << bits) <= 2 * coord_bound + 1) ++bits;
        if (bits * n <= 64) {
            const detail::Packer pk{n, bits, coord_bound};
            return detail::orbit_depths<std::uint64_t>(
                cartan, mu0, weight, opt, max_depth, [&](const long long* v) { return pk.pack(v); },
                [&](std::uint64_t k, long long* v) { pk.unpack(k, v); });
        }
    }
    return detail::orbit_depths<std::vector<long long>>(
        cartan, mu0, weight, opt, max_depth, [n](const long long* v) { return std::vector<long long>(v, v + n); },
        [n](const std::vector<long long>& k, long long* v) { std::copy(k.begin(), k.begin() + n, v); });
}

/// max over positive roots of <lambda, alpha^vee>, bounding the coordinates of W*lambda.
inline long long orbit_coordinate_bound(const RootSystem& sys, const WeightVec& lambda)
{
    const RatVec l = lambda.root_coords(sys);
    long long b = 0;
    for (const auto& a : sys.positive_roots()) b = std::max<long long>(b, std::llabs(floor_of(sys.coroot_pairing(l, a))));
    return b;
}

/// Attained values of lambda-atomic length over W, via the orbit of lambda.
inline ImageReport image_set(const SystemPtr& sys, const WeightVec& lambda, const OrbitOptions& opt = {})
{
    sys->check_dim(lambda.fund.size());
    require_dominant(lambda);
    return orbit_image(sys->cartan(), lambda.integer_fund(), std::vector<long long>(sys->rank(), 1), opt,
                       orbit_coordinate_bound(*sys, lambda) + 1);
}

inline long long atomic_length_w0(const SystemPtr& sys, const WeightVec& lambda)
{
    return lambda_atomic_length(longest_element(sys), lambda);
}

/// 2 <rho, rho^vee>.
inline long long two_rho_rho_check(const RootSystem& sys)
{
    const RatVec r = sys.rho();
    return floor_of(2 * height(r));
}

struct IdealResult {
    bool ideal = false;
    bool fast_rejected = false;
    std::optional<ImageReport> report;
};

inline IdealResult is_ideal(const SystemPtr& sys, const WeightVec& lambda, const OrbitOptions& opt = {})
{
    require_dominant(lambda);
    const auto m = lambda.integer_fund();
    const bool zero = std::all_of(m.begin(), m.end(), [](long long x) { return x == 0; });
    const bool has_one = std::any_of(m.begin(), m.end(), [](long long x) { return x == 1; });
    if (!zero && !has_one) return {false, true, std::nullopt};
    ImageReport rep = image_set(sys, lambda, opt);
    const bool ok = rep.surjective();
    return {ok, false, std::move(rep)};
}

/// <lambda, alpha^vee> for lambda in fundamental coordinates.
inline Rational coroot_value(const RootSystem& sys, const WeightVec& lambda, const RootVec& alpha)
{
    return sys.coroot_pairing(lambda.root_coords(sys), alpha);
}

inline bool is_minuscule(const RootSystem& sys, const WeightVec& lambda)
{
    for (const auto& a : sys.positive_roots()) {
        const Rational v = coroot_value(sys, lambda, a);
        if (v < -1 || v > 1) return false;
    }
    return true;
}

/// Minuscule fundamental weights of an irreducible finite type.
inline std::vector<WeightVec> minuscule_weights(const SystemPtr& sys)
{
    if (!sys->label()) throw Error(ErrorKind::UnsupportedType, "minuscule table needs a labelled type");
    const TypeLabel t = *sys->label();
    const int n = t.rank;
    std::vector<int> idx;
    switch (t.family) {
    case 'A':
        for (int i = 1; i <= n; ++i) idx.push_back(i);
        break;
    case 'B': idx = {n}; break;
    case 'C': idx = {1}; break;
    case 'D': idx = {1, n - 1, n}; break;
    case 'E':
        if (n == 6) idx = {1, 6};
        if (n == 7) idx = {7};
        break;
    default: break;
    }
    std::vector<WeightVec> out;
    for (int i : idx) {
        WeightVec w = WeightVec::fundamental(*sys, i);
        if (!is_minuscule(*sys, w)) throw Error(ErrorKind::PreconditionViolation, "table entry is not minuscule");
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace atomic
