#pragma once

#include "atomic/atomiclen.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace atomic {

/// Affine word letters are 0..n; 0 is the affine simple reflection.
using AffineWord = std::vector<int>;

inline void require_affine(const RootSystem& sys)
{
    if (!sys.is_affine()) throw Error(ErrorKind::UnsupportedType, sys.name() + " is not an affine type");
}

/// x -> wbar(x) + beta, i.e. the product tau_beta * wbar.
class AffineElement {
public:
    AffineElement(RootVec beta, WeylElement wbar) : beta_(std::move(beta)), wbar_(std::move(wbar)) {}

    static AffineElement identity(const SystemPtr& sys)
    {
        return AffineElement(RootVec(sys->rank(), 0), WeylElement::identity(sys));
    }

    static AffineElement simple(const SystemPtr& sys, int i)
    {
        if (i < 0 || i > sys->rank())
            throw Error(ErrorKind::InvalidIndex, "affine index " + std::to_string(i) + " outside 0.." + std::to_string(sys->rank()));
        if (i == 0) {
            const RootVec& t = sys->highest_root();
            return AffineElement(t, WeylElement::reflection(sys, t));
        }
        return AffineElement(RootVec(sys->rank(), 0), WeylElement::simple(sys, i));
    }

    static AffineElement translation(const SystemPtr& sys, RootVec beta)
    {
        sys->check_dim(beta.size());
        return AffineElement(std::move(beta), WeylElement::identity(sys));
    }

    /// s_{alpha,k}: x -> x - ((alpha|x) - k) alpha^vee.
    static AffineElement reflection(const SystemPtr& sys, const RootVec& alpha, int k)
    {
        const Rational len = sys->inner_product(alpha, alpha);
        RootVec b(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) b[i] = static_cast<int>(floor_of(Rational(2 * k * alpha[i]) / len));
        return AffineElement(std::move(b), WeylElement::reflection(sys, alpha));
    }

    const RootVec& beta() const { return beta_; }
    const WeylElement& finite_part() const { return wbar_; }
    const SystemPtr& system() const { return wbar_.system(); }

    AffineElement operator*(const AffineElement& o) const
    {
        RootVec b = wbar_.act(o.beta_);
        for (std::size_t i = 0; i < b.size(); ++i) b[i] += beta_[i];
        return AffineElement(std::move(b), wbar_ * o.wbar_);
    }

    bool operator==(const AffineElement& o) const { return beta_ == o.beta_ && wbar_ == o.wbar_; }

    bool is_identity() const
    {
        return wbar_.is_identity() && std::all_of(beta_.begin(), beta_.end(), [](int x) { return x == 0; });
    }

    AffineElement inverse() const
    {
        const WeylElement inv = atomic::inverse(wbar_);
        return AffineElement(negate(inv.act(beta_)), inv);
    }

    /// Geometric action on a point in simple-root coordinates.
    RatVec act_point(const RatVec& x) const
    {
        RatVec y = wbar_.act(x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += beta_[i];
        return y;
    }

private:
    RootVec beta_;
    WeylElement wbar_;
};

inline AffineElement affine_from_word(const SystemPtr& sys, const AffineWord& word)
{
    require_affine(*sys);
    AffineElement w = AffineElement::identity(sys);
    for (int i : word) w = w * AffineElement::simple(sys, i);
    return w;
}

/// Geometric action of s_i on a point: s_0 is the reflection in (theta|x) = 1.
inline RatVec affine_reflect_point(const RootSystem& sys, int i, RatVec x)
{
    if (i < 0 || i > sys.rank()) throw Error(ErrorKind::InvalidIndex, "affine index out of range");
    if (i >= 1) return sys.reflect(std::move(x), i);
    const RootVec& t = sys.highest_root();
    const Rational c = sys.inner_product(x, to_rat(t)) - 1;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * t[k];
    return x;
}

/// Interior point of the fundamental alcove with (alpha_i|x0) = 1/h.
inline RatVec alcove_point(const RootSystem& sys)
{
    const int n = sys.rank();
    const Rational inv_h(1, sys.coxeter_number());
    RatVec x(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += sys.gram_inverse()[i][j] * inv_h;
    return x;
}

/// k(w, alpha) for a positive root; negative roots use k(w,-alpha) = -k(w,alpha).
inline long long shi_coefficient(const AffineElement& w, const RootVec& alpha)
{
    const auto& sys = *w.system();
    if (!is_positive(alpha)) return -shi_coefficient(w, negate(alpha));
    return floor_of(sys.inner_product(to_rat(alpha), w.act_point(alcove_point(sys))));
}

/// Shi coefficients indexed like positive_roots().
using ShiVector = std::vector<long long>;

inline ShiVector shi_vector(const AffineElement& w)
{
    const auto& sys = *w.system();
    const RatVec y = w.act_point(alcove_point(sys));
    ShiVector k;
    for (const auto& a : sys.positive_roots()) k.push_back(floor_of(sys.inner_product(to_rat(a), y)));
    return k;
}

inline ShiVector shi_vector(const WeylElement& w)
{
    return shi_vector(AffineElement(RootVec(w.rank(), 0), w));
}

/// k_a + k_b <= k_{a+b} <= k_a + k_b + 1 whenever a, b, a+b are positive roots.
inline bool shi_admissible(const RootSystem& sys, const ShiVector& k)
{
    const auto& roots = sys.positive_roots();
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            RootVec s = roots[a];
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots[b][i];
            const auto c = sys.positive_index(s);
            if (!c) continue;
            const long long lo = k[a] + k[b];
            if (k[*c] < lo || k[*c] > lo + 1) return false;
        }
    return true;
}

/// Shi vector rows by height, the layout of a root poset drawing.
inline std::vector<std::vector<long long>> shi_pyramid(const RootSystem& sys, const ShiVector& k)
{
    std::vector<std::vector<long long>> rows;
    const auto& roots = sys.positive_roots();
    for (std::size_t a = 0; a < roots.size(); ++a) {
        const int h = height(roots[a]);
        if (static_cast<int>(rows.size()) < h) rows.resize(h);
        rows[h - 1].push_back(k[a]);
    }
    return rows;
}

/// lambda = finite + level * Lambda_0 + delta_coeff * delta; finite in simple-root coordinates.
struct AffineWeight {
    RatVec finite;
    long long level = 0;
    Rational delta_coeff = 0;

    bool operator==(const AffineWeight&) const = default;

    static AffineWeight lambda0(const RootSystem& sys) { return {RatVec(sys.rank(), Rational(0)), 1, 0}; }

    /// sum_i m_i Lambda_i for m = (m_0, ..., m_n).
    static AffineWeight from_affine_fund(const RootSystem& sys, const std::vector<long long>& m)
    {
        if (static_cast<int>(m.size()) != sys.rank() + 1)
            throw Error(ErrorKind::DimensionMismatch, "affine weight needs " + std::to_string(sys.rank() + 1) + " coordinates");
        const auto comarks = sys.comarks();
        AffineWeight w;
        w.level = 0;
        for (std::size_t i = 0; i < m.size(); ++i) w.level += comarks[i] * m[i];
        RatVec f(m.begin() + 1, m.end());
        w.finite = sys.to_root_coords(f);
        return w;
    }

    /// <lambda, alpha_0^vee> = level - (finite|theta).
    Rational m0(const RootSystem& sys) const { return Rational(level) - sys.inner_product(finite, to_rat(sys.highest_root())); }

    std::vector<Rational> affine_fund(const RootSystem& sys) const
    {
        std::vector<Rational> out{m0(sys)};
        const RatVec f = sys.to_fund_coords(finite);
        out.insert(out.end(), f.begin(), f.end());
        return out;
    }

    bool dominant(const RootSystem& sys) const
    {
        const auto a = affine_fund(sys);
        return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q >= 0 && is_integer(q); });
    }
};

inline AffineWeight affine_simple_action(const RootSystem& sys, int i, AffineWeight mu)
{
    if (i < 0 || i > sys.rank()) throw Error(ErrorKind::InvalidIndex, "affine index out of range");
    if (i >= 1) {
        mu.finite = sys.reflect(std::move(mu.finite), i);
        return mu;
    }
    // mu - <mu, alpha_0^vee> alpha_0 with alpha_0 = delta - theta.
    const Rational p = mu.m0(sys);
    const RootVec& t = sys.highest_root();
    for (std::size_t k = 0; k < t.size(); ++k) mu.finite[k] += p * t[k];
    mu.delta_coeff -= p;
    return mu;
}

/// w(mu) for a word, letters applied right to left.
inline AffineWeight affine_weight_action(const RootSystem& sys, const AffineWord& word, AffineWeight mu)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it) mu = affine_simple_action(sys, *it, std::move(mu));
    return mu;
}

/// tau_beta(wbar(mu)) via the translation formula.
inline AffineWeight affine_weight_action(const AffineElement& w, AffineWeight mu)
{
    const auto& sys = *w.system();
    mu.finite = w.finite_part().act(mu.finite);
    const RatVec b = to_rat(w.beta());
    const Rational ell(mu.level);
    mu.delta_coeff -= sys.inner_product(mu.finite, b) + Rational(1, 2) * sys.inner_product(b, b) * ell;
    for (std::size_t k = 0; k < b.size(); ++k) mu.finite[k] += ell * b[k];
    return mu;
}

inline void require_dominant(const RootSystem& sys, const AffineWeight& lambda)
{
    if (!lambda.dominant(sys)) throw Error(ErrorKind::NotDominant, "affine weight is not dominant integral");
}

/// <lambda - mu, rho^vee> with <alpha_i, rho^vee> = 1 (i >= 1) and <delta, rho^vee> = h^vee.
inline Rational affine_rho_check_difference(const RootSystem& sys, const AffineWeight& lambda, const AffineWeight& mu)
{
    Rational s = 0;
    for (int i = 0; i < sys.rank(); ++i) s += lambda.finite[i] - mu.finite[i];
    return s + Rational(sys.dual_coxeter_number()) * (lambda.delta_coeff - mu.delta_coeff);
}

/// Direct path through the weight action of the word.
inline long long affine_atomic_length(const SystemPtr& sys, const AffineWord& word, const AffineWeight& lambda)
{
    require_affine(*sys);
    require_dominant(*sys, lambda);
    return floor_of(affine_rho_check_difference(*sys, lambda, affine_weight_action(*sys, word, lambda)));
}

/// Direct path through the (beta, wbar) action.
inline long long affine_atomic_length(const AffineElement& w, const AffineWeight& lambda)
{
    const auto& sys = *w.system();
    require_affine(sys);
    require_dominant(sys, lambda);
    return floor_of(affine_rho_check_difference(sys, lambda, affine_weight_action(w, lambda)));
}

/// L_lbar(wbar) - l ht(beta) + h^vee ((lbar | wbar^{-1} beta) + |beta|^2 l / 2).
inline long long affine_atomic_length_closed(const AffineElement& w, const AffineWeight& lambda)
{
    const auto& sys = *w.system();
    require_affine(sys);
    require_dominant(sys, lambda);
    const WeylElement& wb = w.finite_part();
    const RatVec b = to_rat(w.beta());
    const RatVec gamma = inverse(wb).act(b);
    const RatVec moved = wb.act(lambda.finite);
    Rational finite_part = 0;
    for (int i = 0; i < sys.rank(); ++i) finite_part += lambda.finite[i] - moved[i];
    const Rational ell(lambda.level);
    const Rational v = finite_part - ell * height(b) +
                       Rational(sys.dual_coxeter_number()) *
                           (sys.inner_product(lambda.finite, gamma) + Rational(1, 2) * sys.inner_product(b, b) * ell);
    return floor_of(v);
}

/// (h^vee / 2)|beta|^2 - ht(beta).
inline long long level_one_atomic_length(const RootSystem& sys, const RootVec& beta)
{
    const Rational v = Rational(sys.dual_coxeter_number(), 2) * sys.inner_product(beta, beta) - height(beta);
    return floor_of(v);
}

/// L_lambda(w) == L_lbar(wbar) + l L_Lambda0(w) + h^vee (lbar | gamma), gamma = wbar^{-1}(beta).
inline bool affine_decomposition_check(const AffineElement& w, const AffineWeight& lambda)
{
    const auto& sys = *w.system();
    const long long direct = affine_atomic_length(w, lambda);
    const RatVec gamma = inverse(w.finite_part()).act(to_rat(w.beta()));
    const RatVec moved = w.finite_part().act(lambda.finite);
    Rational finite_part = 0;
    for (int i = 0; i < sys.rank(); ++i) finite_part += lambda.finite[i] - moved[i];
    const Rational rhs = finite_part + Rational(lambda.level * level_one_atomic_length(sys, w.beta())) +
                         Rational(sys.dual_coxeter_number()) * sys.inner_product(lambda.finite, gamma);
    return rhs == Rational(direct);
}

/// Hermite-reduced basis of the lattice spanned by integer vectors.
inline IntMatrix lattice_basis(std::vector<std::vector<long long>> rows, int n)
{
    IntMatrix basis;
    int r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        for (;;) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 && (piv < 0 || std::llabs(rows[i][col]) < std::llabs(rows[piv][col]))) piv = i;
            if (piv < 0) break;
            std::swap(rows[r], rows[piv]);
            bool done = true;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][col] == 0) continue;
                const long long q = rows[i][col] / rows[r][col];
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] != 0) ++r;
    }
    for (int i = 0; i < r; ++i) basis.emplace_back(rows[i].begin(), rows[i].end());
    return basis;
}

/// Translation lattice of the affine Weyl group: the span of the translation
/// parts of w s_0 w^{-1} s_{w(theta)}, i.e. of the W-orbit of theta.
inline IntMatrix translation_lattice(const RootSystem& sys)
{
    std::vector<std::vector<long long>> gens;
    std::set<RootVec> orbit{sys.highest_root()};
    std::vector<RootVec> queue{sys.highest_root()};
    while (!queue.empty()) {
        RootVec r = queue.back();
        queue.pop_back();
        gens.emplace_back(r.begin(), r.end());
        for (int i = 1; i <= sys.rank(); ++i) {
            RootVec s = sys.reflect(r, i);
            if (orbit.insert(s).second) queue.push_back(s);
        }
    }
    return lattice_basis(std::move(gens), sys.rank());
}

struct AffineProbeReport {
    ImageReport image;
    long long certified_max = -1;           ///< every value <= this is decided by the search
    std::vector<long long> certified_missing;
    double radius = 0;
    std::uint64_t lattice_points = 0;
};

/// Values of L_lambda over all (beta, wbar) with |beta| <= radius, and the
/// range in which the search is provably complete.
inline AffineProbeReport affine_image_probe(const SystemPtr& sysp, const AffineWeight& lambda, double radius,
                                            std::uint64_t cap = 50'000'000)
{
    const auto& sys = *sysp;
    require_affine(sys);
    require_dominant(sys, lambda);
    if (radius < 0) throw Error(ErrorKind::RadiusTooLarge, "negative radius");
    const int n = sys.rank();
    const IntMatrix basis = translation_lattice(sys);
    // Gram matrix of the lattice basis and the coordinate box of the ball.
    RatMatrix bg(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) bg[i][j] = sys.inner_product(basis[i], basis[j]);
    const RatMatrix bgi = invert(bg);
    std::vector<long long> box(n);
    double points = 1;
    for (int i = 0; i < n; ++i) {
        const double q = boost::rational_cast<double>(bgi[i][i]);
        box[i] = static_cast<long long>(std::floor(radius * std::sqrt(q) + 1e-9));
        points *= static_cast<double>(2 * box[i] + 1);
    }
    const bool finite_trivial = std::all_of(lambda.finite.begin(), lambda.finite.end(), [](const Rational& q) { return q.numerator() == 0; });
    const std::vector<WeylElement> group = finite_trivial ? std::vector<WeylElement>{WeylElement::identity(sysp)} : enumerate_group(sysp);
    if (points * static_cast<double>(group.size()) > static_cast<double>(cap))
        throw Error(ErrorKind::RadiusTooLarge, "search of radius " + std::to_string(radius) + " exceeds cap");

    struct Pre {
        RatVec winv_lambda_dir;   // wbar(lbar) is not needed; (lbar | wbar^{-1} b) = (wbar(lbar) | b)
        Rational finite_value;
    };
    std::vector<Pre> pre;
    for (const auto& w : group) {
        const RatVec moved = w.act(lambda.finite);
        Rational fv = 0;
        for (int i = 0; i < n; ++i) fv += lambda.finite[i] - moved[i];
        pre.push_back({moved, fv});
    }
    const Rational ell(lambda.level);
    const Rational hv(sys.dual_coxeter_number());
    const double r2 = radius * radius + 1e-9;

    AffineProbeReport rep;
    rep.radius = radius;
    std::vector<long long> c(n);
    for (int i = 0; i < n; ++i) c[i] = -box[i];
    std::set<long long> values;
    for (;;) {
        RootVec b(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[j] += static_cast<int>(c[i] * basis[i][j]);
        const Rational len = sys.inner_product(b, b);
        if (boost::rational_cast<double>(len) <= r2) {
            ++rep.lattice_points;
            const RatVec br = to_rat(b);
            const Rational base = -ell * height(b) + hv * Rational(1, 2) * len * ell;
            for (const auto& p : pre) values.insert(floor_of(p.finite_value + base + hv * sys.inner_product(p.winv_lambda_dir, br)));
        }
        int k = 0;
        while (k < n && c[k] == box[k]) {
            c[k] = -box[k];
            ++k;
        }
        if (k == n) break;
        ++c[k];
    }
    rep.image.values.assign(values.begin(), values.end());
    rep.image.orbit_size = rep.lattice_points * group.size();
    rep.image.finalize();

    // L >= (h^vee l / 2) r^2 - (l |v| + h^vee |lbar|) r with v = G^{-1} 1, r = |beta|.
    if (lambda.level > 0) {
        RatVec v(n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i] += sys.gram_inverse()[i][j];
        const double vn = std::sqrt(boost::rational_cast<double>(sys.inner_product(v, v)));
        const double ln = std::sqrt(boost::rational_cast<double>(sys.inner_product(lambda.finite, lambda.finite)));
        const double a = boost::rational_cast<double>(hv) * static_cast<double>(lambda.level) / 2;
        const double cprime = static_cast<double>(lambda.level) * vn + boost::rational_cast<double>(hv) * ln;
        if (radius >= cprime / (2 * a)) {
            const double f = a * radius * radius - cprime * radius;
            rep.certified_max = static_cast<long long>(std::floor(f - 1e-7));
        }
    } else {
        rep.certified_max = std::numeric_limits<long long>::max();
    }
    for (long long m : rep.image.missing)
        if (m <= rep.certified_max) rep.certified_missing.push_back(m);
    if (rep.certified_max != std::numeric_limits<long long>::max()) {
        for (long long x = rep.image.max_value + 1; x <= rep.certified_max; ++x) rep.certified_missing.push_back(x);
    }
    return rep;
}

/// Depth image of the orbit W*lambda in a simply-laced untwisted affine type,
/// truncated at max_depth; lambda = sum m_i Lambda_i.
inline ImageReport affine_orbit_image(const SystemPtr& sysp, const std::vector<long long>& m, long long max_depth,
                                      const OrbitOptions& opt = {})
{
    const auto& sys = *sysp;
    require_affine(sys);
    if (!sys.label()->simply_laced())
        throw Error(ErrorKind::UnsupportedType, "orbit depths need <alpha_0, rho^vee> = 1 (simply-laced types)");
    if (static_cast<int>(m.size()) != sys.rank() + 1) throw Error(ErrorKind::DimensionMismatch, "need m_0..m_n");
    if (std::any_of(m.begin(), m.end(), [](long long x) { return x < 0; }))
        throw Error(ErrorKind::NotDominant, "negative affine coordinate");
    return orbit_image(sys.affine_cartan(), m, std::vector<long long>(sys.rank() + 1, 1), opt, 0, max_depth);
}

} // namespace atomic
