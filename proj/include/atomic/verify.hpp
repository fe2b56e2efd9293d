#pragma once

#include "atomic/affine.hpp"
#include "atomic/cores.hpp"
#include "atomic/fixtures.hpp"
#include "atomic/perms.hpp"
#include "atomic/susanfe.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace atomic {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

namespace detail {

inline std::string join(const std::vector<long long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f)
{
    try {
        CheckResult r = f();
        r.name = name;
        return r;
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

} // namespace detail

/// Every embedded fixture table, checked against fresh computations.
inline std::vector<CheckResult> run_fixture_suite(bool stress = false, unsigned threads = 1)
{
    std::vector<CheckResult> out;
    OrbitOptions opt;
    opt.threads = threads;

    for (const auto& f : fixtures::image_sets()) {
        out.push_back(detail::guarded("image " + f.type + " " + detail::join({f.weight.begin(), f.weight.end()}), [&] {
            const auto sys = build_root_system(f.type);
            const auto rep = image_set(sys, WeightVec::from_fund(f.weight), opt);
            return CheckResult{"", rep.values == f.values, "got " + detail::join(rep.values)};
        }));
    }

    out.push_back(detail::guarded("w0 classical n<=8", [&] {
        for (char fam : {'A', 'B', 'C', 'D'})
            for (int n = fam == 'D' ? 4 : (fam == 'A' ? 1 : 2); n <= 8; ++n) {
                const auto sys = build_root_system(TypeLabel{fam, n, false});
                const long long want = fixtures::classical_w0(fam, n);
                if (two_rho_rho_check(*sys) != want || atomic_length_w0(sys, WeightVec::rho(*sys)) != want)
                    return CheckResult{"", false, sys->name()};
            }
        return CheckResult{"", true, ""};
    }));
    for (const auto& f : fixtures::exceptional_w0()) {
        out.push_back(detail::guarded("w0 " + f.type, [&] {
            const auto sys = build_root_system(f.type);
            const long long a = two_rho_rho_check(*sys), b = atomic_length_w0(sys, WeightVec::rho(*sys));
            return CheckResult{"", a == f.value && b == f.value, std::to_string(a) + " / " + std::to_string(b)};
        }));
    }

    for (const auto& f : fixtures::c3_ideal()) {
        out.push_back(detail::guarded("ideal C3 " + detail::join({f.weight.begin(), f.weight.end()}), [&] {
            const auto sys = build_root_system("C3");
            const auto r = is_ideal(sys, WeightVec::from_fund(f.weight), opt);
            const long long max = r.report ? r.report->max_value : atomic_length_w0(sys, WeightVec::from_fund(f.weight));
            return CheckResult{"", r.ideal == f.ideal && max == f.max, "max " + std::to_string(max)};
        }));
    }

    out.push_back(detail::guarded("affine A2~ table", [&] {
        const auto sys = build_root_system("A2~");
        const auto lambda = AffineWeight::lambda0(*sys);
        int row = 0;
        for (const auto& f : fixtures::affine_a2_rows()) {
            ++row;
            const AffineElement w = affine_from_word(sys, f.word);
            const WeylElement wbar = evaluate(sys, f.finite_word);
            const RootVec gamma = inverse(wbar).act(f.beta);
            const bool ok = w.beta() == f.beta && w.finite_part() == wbar && gamma == f.gamma &&
                            affine_atomic_length(sys, f.word, lambda) == f.value &&
                            affine_atomic_length_closed(w, lambda) == f.value && level_one_atomic_length(*sys, f.beta) == f.value;
            if (!ok) return CheckResult{"", false, "row " + std::to_string(row)};
        }
        return CheckResult{"", true, ""};
    }));

    for (const auto& f : fixtures::shi_pyramids()) {
        out.push_back(detail::guarded("shi " + f.name, [&] {
            const auto sys = build_root_system(f.type);
            const WeylElement t = f.name == "B4 t'" ? special_reflection(sys).t : WeylElement::reflection(sys, sys->highest_root());
            return CheckResult{"", shi_pyramid(*sys, shi_vector(t)) == f.pyramid, ""};
        }));
    }

    out.push_back(detail::guarded("lambda-inversion sets A4", [&] {
        const auto sys = build_root_system("A4");
        const auto lambda = WeightVec::from_fund({1, 2, 3, 4});
        for (const auto& f : fixtures::lambda_inversion_sets()) {
            const auto got = lambda_inversion_set(sys, f.word, lambda);
            std::vector<std::pair<int, RootVec>> a, b;
            for (const auto& e : got.entries) {
                if (e.m != e.j) return CheckResult{"", false, "coefficient"};
                a.emplace_back(e.j, e.root);
            }
            for (const auto& e : f.entries) b.emplace_back(e.j, ambient_difference(e.a, e.b, 5));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return CheckResult{"", false, "word " + detail::join({f.word.begin(), f.word.end()})};
        }
        return CheckResult{"", true, ""};
    }));

    out.push_back(detail::guarded("3-cores up to size 5", [&] {
        std::vector<Partition> want;
        for (const auto& p : fixtures::three_cores_up_to_5()) want.emplace_back(p);
        std::sort(want.begin(), want.end());
        std::vector<Partition> got;
        for (const auto& [s, list] : orbit_cores(2, 5)) got.insert(got.end(), list.begin(), list.end());
        std::sort(got.begin(), got.end());
        return CheckResult{"", got == want, std::to_string(got.size()) + " cores"};
    }));

    out.push_back(detail::guarded("special constants K_n", [&] {
        for (char fam : {'A', 'B', 'C', 'D'})
            for (int n = fam == 'D' ? 4 : 2; n <= 6; ++n) {
                const auto sys = build_root_system(TypeLabel{fam, n, false});
                if (special_reflection(sys).K != special_constant_formula(fam, n)) return CheckResult{"", false, sys->name()};
            }
        return CheckResult{"", true, ""};
    }));

    out.push_back(detail::guarded("G2 asymmetry", [&] {
        const auto sys = build_root_system("G2");
        const long long a = atomic_length(evaluate(sys, {2, 1})), b = atomic_length(evaluate(sys, {1, 2}));
        return CheckResult{"", a == 3 && b == 5, std::to_string(a) + " vs " + std::to_string(b)};
    }));

    if (stress) {
        for (const char* t : {"E7", "E8"}) {
            out.push_back(detail::guarded(std::string("surjectivity ") + t, [&] {
                const auto sys = build_root_system(t);
                OrbitOptions big = opt;
                big.cap = std::uint64_t(1) << 31;
                const auto rep = image_set(sys, WeightVec::rho(*sys), big);
                return CheckResult{"", rep.surjective() && rep.max_value == two_rho_rho_check(*sys),
                                   "orbit " + std::to_string(rep.orbit_size)};
            }));
        }
    }
    return out;
}

} // namespace atomic
