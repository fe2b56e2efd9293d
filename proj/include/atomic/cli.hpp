#pragma once

#include "atomic/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace atomic::cli {

using nlohmann::json;

/// Parses "1,2,1", "[1,2,1]" or "" into integers.
inline std::vector<long long> parse_list(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (c != '[' && c != ']' && c != ' ') t += c;
    std::vector<long long> out;
    if (t.empty()) return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != item.size()) throw Error(ErrorKind::PreconditionViolation, "bad integer '" + item + "' in list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

inline std::vector<int> parse_ints(const std::string& s)
{
    const auto v = parse_list(s);
    return {v.begin(), v.end()};
}

inline json rational_json(const Rational& q)
{
    if (is_integer(q)) return q.numerator();
    return to_string(q);
}

inline json image_json(const std::string& type, const std::vector<int>& weight, const ImageReport& r)
{
    return {{"type", type}, {"weight", weight}, {"max", r.max_value}, {"values", r.values}, {"missing", r.missing}, {"orbit_size", r.orbit_size}};
}

struct Settings {
    std::string type;
    std::string weight;
    std::string word;
    bool as_json = false;
    bool list = false;
    bool count_only = false;
    bool stats = false;
    bool stress = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    double radius = 8;
    int n = 2;
    int max_size = 20;
};

namespace detail {

inline std::vector<int> weight_or_rho(const Settings& s, const RootSystem& sys)
{
    if (s.weight.empty()) return std::vector<int>(sys.rank(), 1);
    auto w = parse_ints(s.weight);
    sys.check_dim(w.size());
    return w;
}

inline OrbitOptions orbit_options(const Settings& s)
{
    OrbitOptions o;
    o.threads = s.threads;
    if (s.stress) o.cap = std::uint64_t(1) << 31;
    return o;
}

inline std::string join(const std::vector<long long>& v, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string join_ints(const std::vector<int>& v, const char* sep = ",") { return join({v.begin(), v.end()}, sep); }

inline void print_pyramid(std::ostream& out, const std::vector<std::vector<long long>>& rows)
{
    std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t r = rows.size(); r-- > 0;) {
        const std::size_t pad = width > rows[r].size() ? (width - rows[r].size()) * 2 : 0;
        out << std::string(pad, ' ');
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            std::string cell = std::to_string(rows[r][i]);
            out << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell << (i + 1 < rows[r].size() ? " " : "");
        }
        out << '\n';
    }
}

inline int cmd_image(const Settings& s, std::ostream& out)
{
    const auto sys = build_root_system(s.type);
    const auto w = weight_or_rho(s, *sys);
    const auto rep = image_set(sys, WeightVec::from_fund(w), orbit_options(s));
    if (s.as_json) {
        out << image_json(sys->name(), w, rep).dump() << '\n';
    } else {
        out << "type " << sys->name() << " weight " << join_ints(w) << " orbit " << rep.orbit_size << '\n';
        out << "max " << rep.max_value << '\n' << "values " << join(rep.values) << '\n' << "missing " << join(rep.missing) << '\n';
    }
    return 0;
}

inline int cmd_w0(const Settings& s, std::ostream& out)
{
    const auto sys = build_root_system(s.type);
    const auto w = weight_or_rho(s, *sys);
    const long long v = atomic_length_w0(sys, WeightVec::from_fund(w));
    if (s.as_json)
        out << json{{"type", sys->name()}, {"weight", w}, {"w0", v}}.dump() << '\n';
    else
        out << v << '\n';
    return 0;
}

inline int cmd_susanfe(const Settings& s, std::ostream& out)
{
    const auto sys = build_root_system(s.type);
    if (s.list) {
        json arr = json::array();
        for (const auto& [t, len] : susanfe_reflections(sys)) {
            const RootVec r = reflection_root(t);
            if (s.as_json)
                arr.push_back({{"root", r}, {"word", reduced_word(t)}, {"restricted_length", len}});
            else
                out << "root " << join_ints(r) << " word " << join_ints(reduced_word(t)) << " L(t,I) " << len << '\n';
        }
        if (s.as_json) out << json{{"type", sys->name()}, {"reflections", arr}}.dump() << '\n';
        return 0;
    }
    const auto sr = special_reflection(sys);
    if (s.as_json)
        out << json{{"type", sys->name()}, {"word", sr.word}, {"root", reflection_root(sr.t)}, {"K", sr.K}}.dump() << '\n';
    else
        out << "t " << join_ints(sr.word) << " root " << join_ints(reflection_root(sr.t)) << " K " << sr.K << '\n';
    return 0;
}

inline int cmd_shi(const Settings& s, std::ostream& out)
{
    const auto sys = build_root_system(s.type);
    const auto word = parse_ints(s.word);
    ShiVector k;
    if (sys->is_affine()) {
        k = shi_vector(affine_from_word(sys, word));
    } else {
        k = shi_vector(evaluate(sys, word));
    }
    const auto rows = shi_pyramid(*sys, k);
    if (s.as_json) {
        out << json{{"type", sys->name()}, {"word", word}, {"shi", k}, {"rows", rows}, {"admissible", shi_admissible(*sys, k)}}.dump() << '\n';
    } else {
        print_pyramid(out, rows);
    }
    return 0;
}

inline int cmd_affine(const Settings& s, std::ostream& out)
{
    const auto sys = build_root_system(s.type);
    require_affine(*sys);
    const auto m = s.weight.empty() ? [&] {
        std::vector<long long> v(sys->rank() + 1, 0);
        v[0] = 1;
        return v;
    }()
                                    : parse_list(s.weight);
    const AffineWeight lambda = AffineWeight::from_affine_fund(*sys, m);
    if (!s.word.empty()) {
        const auto word = parse_ints(s.word);
        const AffineElement w = affine_from_word(sys, word);
        const long long direct = affine_atomic_length(sys, word, lambda);
        const long long closed = affine_atomic_length_closed(w, lambda);
        const RootVec gamma = inverse(w.finite_part()).act(w.beta());
        if (s.as_json) {
            out << json{{"type", sys->name()}, {"weight", m}, {"word", word}, {"beta", w.beta()},
                        {"finite_word", reduced_word(w.finite_part())}, {"gamma", gamma}, {"direct", direct}, {"closed", closed}}
                       .dump()
                << '\n';
        } else {
            out << "beta " << join_ints(w.beta()) << " finite " << join_ints(reduced_word(w.finite_part())) << " gamma "
                << join_ints(gamma) << '\n'
                << "L " << direct << " closed " << closed << '\n';
        }
        return direct == closed ? 0 : 1;
    }
    const auto rep = affine_image_probe(sys, lambda, s.radius);
    const bool unbounded = rep.certified_max == std::numeric_limits<long long>::max();
    if (s.as_json) {
        out << json{{"type", sys->name()},
                    {"weight", m},
                    {"radius", s.radius},
                    {"lattice_points", rep.lattice_points},
                    {"values", rep.image.values},
                    {"certified_max", unbounded ? json(nullptr) : json(rep.certified_max)},
                    {"certified_missing", rep.certified_missing}}
                       .dump()
            << '\n';
    } else {
        out << "type " << sys->name() << " weight " << join(m, ",") << " radius " << s.radius << " points " << rep.lattice_points << '\n';
        out << "values " << join(rep.image.values) << '\n';
        out << "certified up to " << (unbounded ? std::string("all") : std::to_string(rep.certified_max)) << ", missing "
            << join(rep.certified_missing) << '\n';
    }
    return 0;
}

inline int cmd_cores(const Settings& s, std::ostream& out)
{
    const auto cores = orbit_cores(s.n, s.max_size);
    if (s.as_json) {
        json sizes = json::object();
        for (const auto& [k, list] : cores) sizes[std::to_string(k)] = list.size();
        json j{{"n", s.n}, {"sizes", sizes}};
        if (!s.count_only) {
            json all = json::array();
            for (const auto& [k, list] : cores)
                for (const auto& p : list) all.push_back(p.parts());
            j["cores"] = all;
        }
        out << j.dump() << '\n';
        return 0;
    }
    for (const auto& [k, list] : cores) {
        out << k << ": " << list.size();
        if (!s.count_only) {
            out << "  ";
            for (const auto& p : list) out << " (" << join_ints(p.parts()) << ")";
        }
        out << '\n';
    }
    return 0;
}

inline int cmd_entropy(const Settings& s, std::ostream& out)
{
    if (s.n < 1 || s.n > 9) throw Error(ErrorKind::SizeTooLarge, "n must lie in 1..9");
    out << "one_line,length,invsum,ninvsum,entropy,cosine\n";
    long long count = 0, bad = 0;
    const long long total = static_cast<long long>(s.n + 1) * s.n * (s.n - 1) / 6;
    const long long cos_w0 = cosine(Permutation::longest(s.n));
    for_each_permutation(s.n, [&](const Permutation& w) {
        std::string line;
        for (int v : w.one_line()) line += std::to_string(v);
        const long long inv = invsum(w), ninv = ninvsum(w), e = entropy(w), c = cosine(w);
        out << line << ',' << inversions(w).size() << ',' << inv << ',' << ninv << ',' << e << ',' << c << '\n';
        ++count;
        if (s.stats) {
            const long long al = s.n >= 2 ? atomic_length(to_weyl(w)) : 0;
            if (e != 2 * inv || inv != al || c != cos_w0 + ninv || inv + ninv != total) ++bad;
        }
    });
    if (s.stats) out << "# permutations " << count << " identity failures " << bad << '\n';
    return bad == 0 ? 0 : 1;
}

inline int cmd_verify(const Settings& s, std::ostream& out)
{
    int failed = 0;
    for (const auto& r : run_fixture_suite(s.stress, s.threads)) {
        out << (r.ok ? "PASS " : "FAIL ") << r.name << (r.detail.empty() || r.ok ? "" : "  (" + r.detail + ")") << '\n';
        if (!r.ok) ++failed;
    }
    out << (failed ? std::to_string(failed) + " fixture(s) failed" : std::string("all fixtures pass")) << '\n';
    return failed ? 1 : 0;
}

} // namespace detail

/// Runs the command line; returns 0 on success, 1 on a failed check, 2 on usage errors, 3 on computation caps.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Atomic length on finite and affine Weyl groups"};
    app.require_subcommand(1);
    Settings s;

    auto type_opt = [&](CLI::App* c, bool required = true) {
        auto* o = c->add_option("--type", s.type, "Cartan type, e.g. A5, E8, A2~");
        if (required) o->required();
    };
    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", s.as_json, "JSON output"); };
    auto threads_opt = [&](CLI::App* c) {
        c->add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1u, 256u));
        c->add_flag("--stress", s.stress, "raise computation caps");
    };

    auto* image = app.add_subcommand("image", "image set of the lambda-atomic length");
    type_opt(image);
    image->add_option("--weight", s.weight, "fundamental coordinates, default rho");
    json_flag(image);
    threads_opt(image);

    auto* w0 = app.add_subcommand("w0", "atomic length of the longest element");
    type_opt(w0);
    w0->add_option("--weight", s.weight, "fundamental coordinates, default rho");
    json_flag(w0);

    auto* susanfe = app.add_subcommand("susanfe", "special reflection and Susanfe reflections");
    type_opt(susanfe);
    susanfe->add_flag("--list", s.list, "list every Susanfe reflection with L(t,I)");
    json_flag(susanfe);

    auto* shi = app.add_subcommand("shi", "Shi vector of an element");
    type_opt(shi);
    shi->add_option("--word", s.word, "word, e.g. 0,1,2 (affine) or 1,2,1");
    json_flag(shi);

    auto* affine = app.add_subcommand("affine", "affine atomic length");
    type_opt(affine);
    affine->add_option("--weight", s.weight, "affine fundamental coordinates m_0..m_n, default Lambda_0");
    affine->add_option("--radius", s.radius, "translation ball radius")->check(CLI::Range(0.0, 1000.0));
    affine->add_option("--word", s.word, "evaluate one element instead of probing the image");
    json_flag(affine);

    auto* cores = app.add_subcommand("cores", "(n+1)-cores by size");
    cores->add_option("--n", s.n, "rank n, cores are (n+1)-cores")->required()->check(CLI::Range(1, 64));
    cores->add_option("--max", s.max_size, "largest size")->required()->check(CLI::Range(0, 1000000));
    cores->add_flag("--count-only", s.count_only, "print counts only");
    json_flag(cores);

    auto* ent = app.add_subcommand("entropy", "permutation statistics as CSV");
    ent->add_option("--n", s.n, "permutations of 1..n")->required()->check(CLI::Range(1, 64));
    ent->add_flag("--stats", s.stats, "check the statistic identities on every row");

    auto* verify = app.add_subcommand("verify", "run the embedded fixture suite");
    threads_opt(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*image) return detail::cmd_image(s, out);
        if (*w0) return detail::cmd_w0(s, out);
        if (*susanfe) return detail::cmd_susanfe(s, out);
        if (*shi) return detail::cmd_shi(s, out);
        if (*affine) return detail::cmd_affine(s, out);
        if (*cores) return detail::cmd_cores(s, out);
        if (*ent) return detail::cmd_entropy(s, out);
        if (*verify) return detail::cmd_verify(s, out);
    } catch (const Error& e) {
        err << json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return e.is_cap() ? 3 : 2;
    } catch (const std::exception& e) {
        err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }
    return 2;
}

} // namespace atomic::cli
