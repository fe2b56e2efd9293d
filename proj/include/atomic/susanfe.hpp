#pragma once

#include "atomic/atomiclen.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace atomic {

struct SusanfeReport {
    WeylElement element;
    std::vector<RootVec> fixed_roots;
    std::vector<RootVec> inversions;
    bool is_susanfe = false;
};

/// Susanfe: N(w) is exactly the set of positive roots not fixed by w.
inline SusanfeReport susanfe_check(const WeylElement& w)
{
    SusanfeReport r{w, {}, inversion_set(w), false};
    std::vector<RootVec> moved;
    for (const auto& a : w.system()->positive_roots()) {
        if (w.act(a) == a)
            r.fixed_roots.push_back(a);
        else
            moved.push_back(a);
    }
    r.is_susanfe = moved == r.inversions;
    return r;
}

/// Sum of heights over N(w) minus Phi_A.
inline long long restricted_atomic_length(const WeylElement& w, const ReflectionSubgroup& A)
{
    long long s = 0;
    for (const auto& a : inversion_set(w))
        if (!A.contains_root(a)) s += height(a);
    return s;
}

struct SpecialReflection {
    WeylElement t;
    Word word;
    std::vector<int> I;
    long long K = 0;
};

/// The classical-type reflection used in the rank induction, with I = {s_2..s_n}
/// and K = L(t, I). Types A, C, D use the highest root; type B uses s_{e_1}.
inline SpecialReflection special_reflection(const SystemPtr& sys)
{
    if (!sys->label()) throw Error(ErrorKind::UnsupportedType, "special reflections need a labelled type");
    const TypeLabel lab = *sys->label();
    const int n = lab.rank;
    Word word;
    switch (lab.family) {
    case 'A':
    case 'B':
    case 'C':
        for (int i = 1; i <= n; ++i) word.push_back(i);
        for (int i = n - 1; i >= 1; --i) word.push_back(i);
        break;
    case 'D': {
        Word u;
        for (int i = 2; i <= n - 2; ++i) u.push_back(i);
        u.push_back(n);
        u.push_back(n - 1);
        for (int i = n - 2; i >= 2; --i) u.push_back(i);
        word = u;
        word.push_back(1);
        word.insert(word.end(), u.rbegin(), u.rend());
        break;
    }
    default: throw Error(ErrorKind::UnsupportedType, "no special reflection for type " + lab.str());
    }
    if (n < 2) throw Error(ErrorKind::UnsupportedType, "rank too small");
    const WeylElement t = evaluate(sys, word);
    if (!is_reduced(sys, word) || !is_reflection(t)) throw Error(ErrorKind::PreconditionViolation, "special word is not a reduced reflection");
    std::vector<int> I;
    for (int i = 2; i <= n; ++i) I.push_back(i);
    const long long K = restricted_atomic_length(t, parabolic_subgroup(sys, I));
    return {t, word, I, K};
}

/// Closed forms for K_n, used as test oracles.
inline long long special_constant_formula(char family, long long n)
{
    switch (family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return 2 * n * n - n;
    case 'D': return 2 * n * n - 4 * n + 1;
    default: throw Error(ErrorKind::UnsupportedType, "no K constant");
    }
}

/// The subgroup t W_B t.
inline ReflectionSubgroup conjugate_subgroup(const WeylElement& t, const ReflectionSubgroup& B)
{
    std::vector<WeylElement> gens;
    for (const auto& g : B.generators()) gens.push_back(t * g * t);
    return ReflectionSubgroup(t.system(), std::move(gens));
}

inline bool in_subgroup(const WeylElement& w, const ReflectionSubgroup& A)
{
    return a_decomposition(w, A).rest.is_identity();
}

/// N_A(x) for x in W_A, computed inside (W_A, S_A) from its Delta_A word.
inline std::vector<RootVec> subgroup_inversion_set(const ADecomposition& d, const ReflectionSubgroup& A)
{
    const auto refl = A.simple_reflections();
    std::vector<RootVec> out;
    WeylElement prefix = WeylElement::identity(A.system());
    for (int k : d.delta_word) {
        RootVec r = prefix.act(A.delta()[k]);
        if (!is_positive(r)) throw Error(ErrorKind::NotReduced, "Delta_A word is not reduced");
        out.push_back(std::move(r));
        prefix = prefix * refl[k];
    }
    return out;
}

/// Checks N(tw) = N_A((tw)_A) + (N(t) minus Phi_A) and L(tw) = L_A((tw)_A) + L(t, A), A = tBt.
inline bool susanfe_decomposition_check(const WeylElement& t, const ReflectionSubgroup& B, const WeylElement& w)
{
    if (!is_reflection(t) || !susanfe_check(t).is_susanfe) throw Error(ErrorKind::PreconditionViolation, "t is not a Susanfe reflection");
    if (!in_subgroup(w, B)) throw Error(ErrorKind::PreconditionViolation, "w is not in W_B");
    const ReflectionSubgroup A = conjugate_subgroup(t, B);
    const WeylElement tw = t * w;
    const ADecomposition d = a_decomposition(tw, A);
    const auto na = subgroup_inversion_set(d, A);
    std::multiset<RootVec> rhs(na.begin(), na.end());
    for (const auto& a : inversion_set(t))
        if (!A.contains_root(a)) rhs.insert(a);
    const auto lhs_v = inversion_set(tw);
    const std::multiset<RootVec> lhs(lhs_v.begin(), lhs_v.end());
    if (lhs != rhs) return false;
    long long la = 0;
    for (const auto& a : na) la += height(a);
    return atomic_length(tw) == la + restricted_atomic_length(t, A);
}

/// Runs susanfe_decomposition_check over every element of W_B.
inline bool susanfe_decomposition_exhaustive(const WeylElement& t, const ReflectionSubgroup& B)
{
    for (const auto& w : enumerate_subgroup(B))
        if (!susanfe_decomposition_check(t, B, w)) return false;
    return true;
}

struct SusanfeInduction {
    ImageReport image;
    bool base_case = false;  ///< rank small enough that the image is computed directly
    long long K = 0;
    long long b_prev = 0;
};

inline int induction_base_rank(char family)
{
    switch (family) {
    case 'A': return 3;
    case 'B':
    case 'C': return 4;
    case 'D': return 5;
    default: throw Error(ErrorKind::UnsupportedType, "no Susanfe induction for this family");
    }
}

/// Rebuilds L(W(X_n)) as L(W_I) u (L(W_I) + K_n) plus L(w0), recursing on the
/// rank down to the small cases, which are computed by orbit traversal.
inline SusanfeInduction surjectivity_susanfe_induction(const SystemPtr& sys)
{
    if (!sys->label()) throw Error(ErrorKind::UnsupportedType, "needs a labelled type");
    const TypeLabel lab = *sys->label();
    const int base = induction_base_rank(lab.family);
    SusanfeInduction out;
    if (lab.rank <= base) {
        out.base_case = true;
        out.image = image_set(sys, WeightVec::rho(*sys));
        return out;
    }
    const auto smaller = build_root_system(TypeLabel{lab.family, lab.rank - 1, false});
    const SusanfeInduction prev = surjectivity_susanfe_induction(smaller);
    const SpecialReflection sr = special_reflection(sys);
    out.K = sr.K;
    out.b_prev = prev.image.max_value;
    std::set<long long> vals(prev.image.values.begin(), prev.image.values.end());
    for (long long v : prev.image.values) vals.insert(v + sr.K);
    vals.insert(atomic_length(longest_element(sys)));
    out.image.values.assign(vals.begin(), vals.end());
    out.image.finalize();
    return out;
}

/// Every Susanfe reflection of W with its L(t, I), I = {s_2..s_n}.
inline std::vector<std::pair<WeylElement, long long>> susanfe_reflections(const SystemPtr& sys)
{
    std::vector<int> I;
    for (int i = 2; i <= sys->rank(); ++i) I.push_back(i);
    std::optional<ReflectionSubgroup> P;
    if (!I.empty()) P.emplace(parabolic_subgroup(sys, I));
    std::vector<std::pair<WeylElement, long long>> out;
    for (const auto& a : sys->positive_roots()) {
        const WeylElement t = WeylElement::reflection(sys, a);
        if (susanfe_check(t).is_susanfe) out.emplace_back(t, P ? restricted_atomic_length(t, *P) : atomic_length(t));
    }
    return out;
}

} // namespace atomic
