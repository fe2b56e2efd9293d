#pragma once

#include "atomic/rootdata.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace atomic {

/// Sequence of 1-based simple-reflection indices.
using Word = std::vector<int>;

/// Element of a finite Weyl group as an integer matrix on simple-root
/// coordinates; column j is the image of alpha_j.
class WeylElement {
public:
    WeylElement(SystemPtr sys, std::vector<int> matrix) : sys_(std::move(sys)), m_(std::move(matrix))
    {
        if (m_.size() != static_cast<std::size_t>(rank() * rank()))
            throw Error(ErrorKind::DimensionMismatch, "matrix size does not match rank");
    }

    static WeylElement identity(SystemPtr sys)
    {
        const int n = sys->rank();
        std::vector<int> m(n * n, 0);
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        return WeylElement(std::move(sys), std::move(m));
    }

    static WeylElement simple(SystemPtr sys, int i)
    {
        sys->check_index(i);
        return identity(sys).times_simple(i);
    }

    /// s_alpha(x) = x - <x, alpha^vee> alpha.
    static WeylElement reflection(SystemPtr sys, const RootVec& alpha)
    {
        if (!sys->is_root(alpha)) throw Error(ErrorKind::NotAReflection, "not a root");
        const int n = sys->rank();
        std::vector<int> m(n * n, 0);
        for (int j = 0; j < n; ++j) {
            const Rational p = sys->coroot_pairing(to_rat(sys->simple_root(j + 1)), alpha);
            const int pj = static_cast<int>(p.numerator());
            for (int r = 0; r < n; ++r) m[r * n + j] = (r == j ? 1 : 0) - pj * alpha[r];
        }
        return WeylElement(std::move(sys), std::move(m));
    }

    const SystemPtr& system() const { return sys_; }
    int rank() const { return sys_->rank(); }
    int at(int r, int c) const { return m_[r * rank() + c]; }
    const std::vector<int>& data() const { return m_; }

    /// Image of alpha_i (1-based).
    RootVec column(int i) const
    {
        const int n = rank();
        RootVec v(n);
        for (int r = 0; r < n; ++r) v[r] = m_[r * n + i - 1];
        return v;
    }

    bool is_identity() const { return *this == identity(sys_); }

    RootVec act(const RootVec& x) const
    {
        sys_->check_dim(x.size());
        const int n = rank();
        RootVec y(n, 0);
        for (int c = 0; c < n; ++c) {
            if (x[c] == 0) continue;
            for (int r = 0; r < n; ++r) y[r] += m_[r * n + c] * x[c];
        }
        return y;
    }

    RatVec act(const RatVec& x) const
    {
        sys_->check_dim(x.size());
        const int n = rank();
        RatVec y(n, Rational(0));
        for (int c = 0; c < n; ++c) {
            if (x[c].numerator() == 0) continue;
            for (int r = 0; r < n; ++r)
                if (m_[r * n + c] != 0) y[r] += x[c] * m_[r * n + c];
        }
        return y;
    }

    WeightVec act(const WeightVec& w) const { return {sys_->to_fund_coords(act(w.root_coords(*sys_)))}; }

    /// this * s_i
    WeylElement times_simple(int i) const
    {
        sys_->check_index(i);
        const int n = rank();
        const auto& c = sys_->cartan();
        std::vector<int> m = m_;
        for (int j = 0; j < n; ++j) {
            const int a = c[i - 1][j];
            if (j == i - 1 || a == 0) continue;
            for (int r = 0; r < n; ++r) m[r * n + j] -= a * m_[r * n + i - 1];
        }
        for (int r = 0; r < n; ++r) m[r * n + i - 1] = -m_[r * n + i - 1];
        return WeylElement(sys_, std::move(m));
    }

    /// s_i * this
    WeylElement simple_times(int i) const
    {
        sys_->check_index(i);
        const int n = rank();
        const auto& c = sys_->cartan();
        std::vector<int> m = m_;
        for (int col = 0; col < n; ++col) {
            int p = 0;
            for (int k = 0; k < n; ++k) p += c[i - 1][k] * m_[k * n + col];
            m[(i - 1) * n + col] -= p;
        }
        return WeylElement(sys_, std::move(m));
    }

    WeylElement operator*(const WeylElement& o) const
    {
        check_same(o);
        const int n = rank();
        std::vector<int> m(n * n, 0);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                const int a = m_[r * n + k];
                if (a == 0) continue;
                for (int c = 0; c < n; ++c) m[r * n + c] += a * o.m_[k * n + c];
            }
        return WeylElement(sys_, std::move(m));
    }

    bool operator==(const WeylElement& o) const { return m_ == o.m_ && same_system(o); }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : m_) h = (h ^ static_cast<std::size_t>(x + 1024)) * 1099511628211ull;
        return h;
    }

    bool same_system(const WeylElement& o) const { return sys_ == o.sys_ || sys_->cartan() == o.sys_->cartan(); }

    void check_same(const WeylElement& o) const
    {
        if (!same_system(o)) throw Error(ErrorKind::SystemMismatch, "elements of different Weyl groups");
    }

private:
    SystemPtr sys_;
    std::vector<int> m_;
};

struct WeylHash {
    std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

using ElementSet = std::unordered_set<WeylElement, WeylHash>;

inline WeylElement evaluate(const SystemPtr& sys, const Word& word)
{
    WeylElement w = WeylElement::identity(sys);
    for (int i : word) w = w.times_simple(i);
    return w;
}

inline WeylElement multiply(const WeylElement& u, const WeylElement& v) { return u * v; }

/// Right descents {i : w(alpha_i) < 0}.
inline std::vector<int> descents(const WeylElement& w)
{
    std::vector<int> d;
    const int n = w.rank();
    for (int i = 0; i < n; ++i)
        if (!is_positive(w.column(i + 1))) d.push_back(i + 1);
    return d;
}

/// Reduced word by stripping the smallest right descent at each step.
inline Word reduced_word(const WeylElement& w)
{
    Word rev;
    WeylElement u = w;
    for (;;) {
        int found = 0;
        for (int i = 1; i <= u.rank(); ++i)
            if (!is_positive(u.column(i))) {
                found = i;
                break;
            }
        if (found == 0) break;
        rev.push_back(found);
        u = u.times_simple(found);
    }
    return Word(rev.rbegin(), rev.rend());
}

inline WeylElement inverse(const WeylElement& w)
{
    const Word word = reduced_word(w);
    WeylElement inv = WeylElement::identity(w.system());
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv = inv.times_simple(*it);
    return inv;
}

/// Left descents {i : alpha_i in N(w)}.
inline std::vector<int> left_descents(const WeylElement& w) { return descents(inverse(w)); }

/// N(w) = {alpha > 0 : w^{-1}(alpha) < 0}, in root order.
inline std::vector<RootVec> inversion_set(const WeylElement& w)
{
    const auto& sys = *w.system();
    std::vector<int> idx;
    for (const auto& b : sys.positive_roots()) {
        RootVec img = w.act(b);
        if (!is_positive(img)) idx.push_back(*sys.positive_index(negate(img)));
    }
    std::sort(idx.begin(), idx.end());
    std::vector<RootVec> out;
    for (int k : idx) out.push_back(sys.positive_roots()[k]);
    return out;
}

inline int length(const WeylElement& w)
{
    int l = 0;
    for (const auto& b : w.system()->positive_roots())
        if (!is_positive(w.act(b))) ++l;
    return l;
}

/// {alpha_{i1}, s_{i1}(alpha_{i2}), s_{i1}s_{i2}(alpha_{i3}), ...} in word order.
inline std::vector<RootVec> inversion_set_from_word(const SystemPtr& sys, const Word& word)
{
    std::vector<RootVec> out;
    WeylElement u = WeylElement::identity(sys);
    for (int i : word) {
        RootVec r = u.act(sys->simple_root(i));
        if (!is_positive(r)) throw Error(ErrorKind::NotReduced, "word is not reduced");
        out.push_back(std::move(r));
        u = u.times_simple(i);
    }
    return out;
}

inline bool is_reduced(const SystemPtr& sys, const Word& word)
{
    return static_cast<int>(word.size()) == length(evaluate(sys, word));
}

inline WeylElement longest_element(const SystemPtr& sys)
{
    WeylElement w = WeylElement::identity(sys);
    for (;;) {
        int found = 0;
        for (int i = 1; i <= sys->rank(); ++i)
            if (is_positive(w.column(i))) {
                found = i;
                break;
            }
        if (found == 0) return w;
        w = w.times_simple(found);
    }
}

inline constexpr std::size_t default_group_cap = 10'000'000;

/// All elements reachable from the identity by right multiplication with the
/// given generators, in breadth-first order.
inline std::vector<WeylElement> enumerate_generated(const WeylElement& start, const std::vector<WeylElement>& gens,
                                                    std::size_t cap = default_group_cap)
{
    std::vector<WeylElement> out{start};
    ElementSet seen{start};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : gens) {
            WeylElement x = out[k] * g;
            if (seen.insert(x).second) {
                if (out.size() >= cap) throw Error(ErrorKind::SubgroupTooLarge, "group exceeds cap " + std::to_string(cap));
                out.push_back(std::move(x));
            }
        }
    }
    return out;
}

/// Every element of W, in breadth-first (hence length-nondecreasing) order.
inline std::vector<WeylElement> enumerate_group(const SystemPtr& sys, std::size_t cap = default_group_cap)
{
    std::vector<WeylElement> out{WeylElement::identity(sys)};
    ElementSet seen{out.front()};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 1; i <= sys->rank(); ++i) {
            WeylElement x = out[k].times_simple(i);
            if (seen.insert(x).second) {
                if (out.size() >= cap) throw Error(ErrorKind::SubgroupTooLarge, "group exceeds cap " + std::to_string(cap));
                out.push_back(std::move(x));
            }
        }
    return out;
}

/// The positive root alpha with w = s_alpha.
inline RootVec reflection_root(const WeylElement& w)
{
    for (const auto& a : w.system()->positive_roots())
        if (WeylElement::reflection(w.system(), a) == w) return a;
    throw Error(ErrorKind::NotAReflection, "element is not a reflection");
}

inline bool is_reflection(const WeylElement& w)
{
    try {
        reflection_root(w);
        return true;
    } catch (const Error&) {
        return false;
    }
}

class ReflectionSubgroup {
public:
    ReflectionSubgroup(SystemPtr sys, std::vector<WeylElement> generators) : sys_(std::move(sys)), gens_(std::move(generators))
    {
        if (gens_.empty()) throw Error(ErrorKind::PreconditionViolation, "empty generating set");
        std::set<int> phi;
        for (const auto& g : gens_) {
            if (!g.same_system(WeylElement::identity(sys_))) throw Error(ErrorKind::SystemMismatch, "generator from another group");
            phi.insert(*sys_->positive_index(reflection_root(g)));
        }
        const auto& roots = sys_->positive_roots();
        for (bool changed = true; changed;) {
            changed = false;
            const std::vector<int> current(phi.begin(), phi.end());
            for (int k : current) {
                const WeylElement s = WeylElement::reflection(sys_, roots[k]);
                for (int j : current) {
                    RootVec img = s.act(roots[j]);
                    if (!is_positive(img)) img = negate(img);
                    if (phi.insert(*sys_->positive_index(img)).second) changed = true;
                }
            }
        }
        for (int k : phi) phi_plus_.push_back(roots[k]);
        member_ = std::vector<bool>(roots.size(), false);
        for (int k : phi) member_[k] = true;
        for (const auto& a : phi_plus_) {
            const WeylElement s = WeylElement::reflection(sys_, a);
            int hits = 0;
            for (const auto& r : inversion_set(s))
                if (contains_root(r)) ++hits;
            if (hits == 1) delta_.push_back(a);
        }
        const int m = static_cast<int>(delta_.size());
        cartan_.assign(m, std::vector<int>(m, 0));
        RatMatrix g(m, RatVec(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                cartan_[i][j] = static_cast<int>(sys_->coroot_pairing(to_rat(delta_[j]), delta_[i]).numerator());
                g[i][j] = sys_->inner_product(delta_[i], delta_[j]);
            }
        delta_gram_inv_ = invert(g);
    }

    const SystemPtr& system() const { return sys_; }
    const std::vector<WeylElement>& generators() const { return gens_; }
    const std::vector<RootVec>& phi_plus() const { return phi_plus_; }
    const std::vector<RootVec>& delta() const { return delta_; }
    const IntMatrix& cartan() const { return cartan_; }

    /// Whether +-alpha lies in Phi_A.
    bool contains_root(const RootVec& alpha) const
    {
        auto k = sys_->positive_index(alpha);
        if (!k) k = sys_->positive_index(negate(alpha));
        return k && member_[*k];
    }

    std::vector<WeylElement> simple_reflections() const
    {
        std::vector<WeylElement> s;
        for (const auto& a : delta_) s.push_back(WeylElement::reflection(sys_, a));
        return s;
    }

    /// Coordinates of a vector of span(Delta_A) on Delta_A.
    RatVec delta_coords(const RootVec& v) const
    {
        const int m = static_cast<int>(delta_.size());
        RatVec rhs(m), c(m, Rational(0));
        for (int i = 0; i < m; ++i) rhs[i] = sys_->inner_product(delta_[i], v);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c[i] += delta_gram_inv_[i][j] * rhs[j];
        return c;
    }

    /// Height relative to Delta_A.
    int height_A(const RootVec& v) const
    {
        const Rational h = height(delta_coords(v));
        return static_cast<int>(h.numerator() / h.denominator());
    }

private:
    SystemPtr sys_;
    std::vector<WeylElement> gens_;
    std::vector<RootVec> phi_plus_;
    std::vector<bool> member_;
    std::vector<RootVec> delta_;
    IntMatrix cartan_;
    RatMatrix delta_gram_inv_;
};

inline ReflectionSubgroup reflection_subgroup(const SystemPtr& sys, std::vector<WeylElement> gens)
{
    return ReflectionSubgroup(sys, std::move(gens));
}

/// Standard parabolic subgroup W_I for a set of 1-based indices.
inline ReflectionSubgroup parabolic_subgroup(const SystemPtr& sys, const std::vector<int>& indices)
{
    std::vector<WeylElement> gens;
    for (int i : indices) gens.push_back(WeylElement::simple(sys, i));
    return ReflectionSubgroup(sys, std::move(gens));
}

struct ADecomposition {
    WeylElement w_A;
    WeylElement rest;
    /// w_A as a word in the Delta_A reflections (0-based positions in delta()).
    std::vector<int> delta_word;
};

/// w = w_A * rest with w_A in W_A and N(rest) disjoint from Phi_A.
inline ADecomposition a_decomposition(const WeylElement& w, const ReflectionSubgroup& A)
{
    const auto refl = A.simple_reflections();
    const auto& delta = A.delta();
    WeylElement current = w;
    WeylElement inv = inverse(w);
    WeylElement wa = WeylElement::identity(w.system());
    std::vector<int> letters;
    for (;;) {
        int found = -1;
        for (std::size_t k = 0; k < delta.size(); ++k)
            if (!is_positive(inv.act(delta[k]))) {
                found = static_cast<int>(k);
                break;
            }
        if (found < 0) break;
        current = refl[found] * current;
        inv = inv * refl[found];
        wa = wa * refl[found];
        letters.push_back(found);
    }
    return {wa, current, letters};
}

/// Elements of W_A, enumerated through its canonical simple reflections.
inline std::vector<WeylElement> enumerate_subgroup(const ReflectionSubgroup& A, std::size_t cap = default_group_cap)
{
    return enumerate_generated(WeylElement::identity(A.system()), A.simple_reflections(), cap);
}

/// Whether x -> (w x)_A maps W_B = w W_A w^{-1} bijectively onto W_A.
inline bool utopic_check(const WeylElement& w, const ReflectionSubgroup& A, std::size_t cap = 1'000'000)
{
    const auto wa = enumerate_subgroup(A, cap);
    const WeylElement winv = inverse(w);
    ElementSet image;
    for (const auto& y : wa) {
        const WeylElement x = w * y * winv;
        image.insert(a_decomposition(w * x, A).w_A);
    }
    if (image.size() != wa.size()) return false;
    for (const auto& y : wa)
        if (!image.count(y)) return false;
    return true;
}

} // namespace atomic
