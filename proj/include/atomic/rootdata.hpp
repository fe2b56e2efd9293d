#pragma once

#include "atomic/errors.hpp"
#include "atomic/rational.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace atomic {

using IntMatrix = std::vector<std::vector<int>>;

/// Coordinates on the simple roots alpha_1..alpha_n.
using RootVec = std::vector<int>;

struct TypeLabel {
    char family = 'A';
    int rank = 1;
    bool affine = false;

    bool operator==(const TypeLabel&) const = default;

    void validate() const
    {
        bool ok = false;
        switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
        }
        if (!ok) throw Error(ErrorKind::InvalidType, "no root system of type " + std::string(1, family) + std::to_string(rank));
    }

    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }

    TypeLabel finite() const { return {family, rank, false}; }

    std::string str() const { return std::string(1, family) + std::to_string(rank) + (affine ? "~" : ""); }

    /// Accepts "A5", "E8", "A2~", "B3^(1)".
    static TypeLabel parse(std::string_view s)
    {
        auto bad = [&] { return Error(ErrorKind::InvalidType, "cannot parse type '" + std::string(s) + "'"); };
        if (s.size() < 2) throw bad();
        TypeLabel t;
        t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        std::size_t pos = 1;
        int rank = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            rank = rank * 10 + (s[pos] - '0');
            if (rank > 1000) throw bad();
            ++pos;
        }
        if (pos == 1) throw bad();
        const std::string_view rest = s.substr(pos);
        if (rest.empty()) {
            t.affine = false;
        } else if (rest == "~" || rest == "^(1)") {
            t.affine = true;
        } else {
            throw bad();
        }
        t.rank = rank;
        t.validate();
        return t;
    }
};

/// Bourbaki Cartan matrix, a_ij = <alpha_j, alpha_i^vee>, 0-based storage.
inline IntMatrix cartan_matrix(const TypeLabel& label)
{
    label.validate();
    const int n = label.rank;
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto edge = [&](int i, int j, int aij, int aji) {
        c[i - 1][j - 1] = aij;
        c[j - 1][i - 1] = aji;
    };
    switch (label.family) {
    case 'A':
        for (int i = 1; i < n; ++i) edge(i, i + 1, -1, -1);
        break;
    case 'B':
        for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1, -1);
        edge(n - 1, n, -1, -2);
        break;
    case 'C':
        for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1, -1);
        edge(n - 1, n, -2, -1);
        break;
    case 'D':
        for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1, -1);
        edge(n - 2, n, -1, -1);
        break;
    case 'E':
        edge(1, 3, -1, -1);
        edge(2, 4, -1, -1);
        for (int i = 3; i < n; ++i) edge(i, i + 1, -1, -1);
        break;
    case 'F':
        edge(1, 2, -1, -1);
        edge(2, 3, -1, -2);
        edge(3, 4, -1, -1);
        break;
    case 'G':
        edge(1, 2, -3, -1);
        break;
    }
    return c;
}

template <class T>
T height(const std::vector<T>& v)
{
    return std::accumulate(v.begin(), v.end(), T(0));
}

inline bool is_positive(const RootVec& v)
{
    bool nonzero = false;
    for (int x : v) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

inline RootVec negate(RootVec v)
{
    for (int& x : v) x = -x;
    return v;
}

inline RatVec to_rat(const RootVec& v) { return RatVec(v.begin(), v.end()); }

/// Finite root system (possibly reducible when built from a bare Cartan matrix).
class RootSystem {
public:
    explicit RootSystem(const TypeLabel& label) : label_(label), cartan_(cartan_matrix(label)) { init(); }

    explicit RootSystem(IntMatrix cartan) : cartan_(std::move(cartan)) { init(); }

    int rank() const { return static_cast<int>(cartan_.size()); }
    const std::optional<TypeLabel>& label() const { return label_; }
    bool is_affine() const { return label_ && label_->affine; }
    std::string name() const { return label_ ? label_->str() : "rank-" + std::to_string(rank()); }

    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<RootVec>& positive_roots() const { return roots_; }
    const RatVec& symmetrizer() const { return d_; }
    const RatMatrix& gram() const { return gram_; }
    const RatMatrix& gram_inverse() const { return gram_inv_; }
    const RatMatrix& cartan_inverse() const { return cartan_inv_; }
    bool irreducible() const { return components_ == 1; }

    /// Position of a positive root in positive_roots(), if it is one.
    std::optional<int> positive_index(const RootVec& v) const
    {
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool is_root(const RootVec& v) const
    {
        return positive_index(v).has_value() || positive_index(negate(v)).has_value();
    }

    const RootVec& highest_root() const
    {
        require_irreducible();
        return roots_.back();
    }

    RatVec rho() const
    {
        RatVec r(rank(), Rational(0));
        for (const auto& b : roots_)
            for (int i = 0; i < rank(); ++i) r[i] += Rational(b[i], 2);
        return r;
    }

    /// <x, rho^vee>: the functional taking value 1 on every simple root.
    template <class T>
    T rho_check(const std::vector<T>& root_coords) const
    {
        return height(root_coords);
    }

    /// Affine labels a_0..a_n (a_0 = 1).
    std::vector<int> marks() const
    {
        const RootVec& t = highest_root();
        std::vector<int> m{1};
        m.insert(m.end(), t.begin(), t.end());
        return m;
    }

    /// Affine colabels a_0^vee..a_n^vee (a_0^vee = 1).
    std::vector<int> comarks() const
    {
        const RootVec& t = highest_root();
        std::vector<int> m{1};
        for (int i = 0; i < rank(); ++i) {
            const Rational c = Rational(t[i]) * d_[i];
            m.push_back(static_cast<int>(c.numerator() / c.denominator()));
        }
        return m;
    }

    int coxeter_number() const { return 1 + height(highest_root()); }

    int dual_coxeter_number() const
    {
        const auto m = comarks();
        return std::accumulate(m.begin(), m.end(), 0);
    }

    /// Untwisted affine Cartan matrix, indices 0..n.
    IntMatrix affine_cartan() const
    {
        const int n = rank();
        const RootVec& t = highest_root();
        IntMatrix a(n + 1, std::vector<int>(n + 1, 0));
        a[0][0] = 2;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i + 1][j + 1] = cartan_[i][j];
        for (int i = 0; i < n; ++i) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += t[k] * cartan_[i][k];
            a[i + 1][0] = -s;
            const Rational ip = inner_product(to_rat(simple_root(i + 1)), to_rat(t));
            a[0][i + 1] = -static_cast<int>(ip.numerator() / ip.denominator());
        }
        return a;
    }

    RootVec simple_root(int i) const
    {
        check_index(i);
        RootVec v(rank(), 0);
        v[i - 1] = 1;
        return v;
    }

    void check_index(int i) const
    {
        if (i < 1 || i > rank())
            throw Error(ErrorKind::IndexOutOfRange, "simple index " + std::to_string(i) + " outside 1.." + std::to_string(rank()));
    }

    void check_dim(std::size_t m) const
    {
        if (m != static_cast<std::size_t>(rank()))
            throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(m) + " in rank " + std::to_string(rank()));
    }

    /// <x, alpha_i^vee> for x in simple-root coordinates, i 1-based.
    int pairing(const RootVec& x, int i) const
    {
        check_index(i);
        check_dim(x.size());
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += x[j] * cartan_[i - 1][j];
        return s;
    }

    Rational pairing(const RatVec& x, int i) const
    {
        check_index(i);
        check_dim(x.size());
        Rational s = 0;
        for (int j = 0; j < rank(); ++j) s += x[j] * cartan_[i - 1][j];
        return s;
    }

    Rational inner_product(const RatVec& x, const RatVec& y) const
    {
        check_dim(x.size());
        check_dim(y.size());
        Rational s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (x[i].numerator() == 0) continue;
            for (int j = 0; j < rank(); ++j)
                if (y[j].numerator() != 0) s += x[i] * gram_[i][j] * y[j];
        }
        return s;
    }

    Rational inner_product(const RootVec& x, const RootVec& y) const { return inner_product(to_rat(x), to_rat(y)); }

    /// <x, alpha^vee> = 2 (x|alpha) / (alpha|alpha).
    Rational coroot_pairing(const RatVec& x, const RootVec& alpha) const
    {
        const RatVec a = to_rat(alpha);
        return 2 * inner_product(x, a) / inner_product(a, a);
    }

    bool is_long(const RootVec& alpha) const { return inner_product(alpha, alpha) == Rational(2); }

    RootVec reflect(RootVec x, int i) const
    {
        const int p = pairing(x, i);
        x[i - 1] -= p;
        return x;
    }

    RatVec reflect(RatVec x, int i) const
    {
        const Rational p = pairing(x, i);
        x[i - 1] -= p;
        return x;
    }

    RatVec to_root_coords(const RatVec& fund) const
    {
        check_dim(fund.size());
        RatVec r(rank(), Rational(0));
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) r[i] += cartan_inv_[i][j] * fund[j];
        return r;
    }

    RatVec to_fund_coords(const RatVec& root) const
    {
        check_dim(root.size());
        RatVec f(rank(), Rational(0));
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) f[i] += Rational(cartan_[i][j]) * root[j];
        return f;
    }

    std::vector<int> to_fund_coords(const RootVec& root) const
    {
        std::vector<int> f(rank(), 0);
        for (int i = 0; i < rank(); ++i) f[i] = pairing(root, i + 1);
        return f;
    }

private:
    void require_irreducible() const
    {
        if (!irreducible()) throw Error(ErrorKind::UnsupportedType, "highest root of a reducible system");
    }

    void init()
    {
        const int n = rank();
        if (n == 0) throw Error(ErrorKind::InvalidType, "empty Cartan matrix");
        for (const auto& row : cartan_)
            if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::DimensionMismatch, "Cartan matrix not square");
        generate_roots();
        derive_symmetrizer();
        gram_.assign(n, RatVec(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram_[i][j] = d_[i] * cartan_[i][j];
        RatMatrix c(n, RatVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i][j] = cartan_[i][j];
        cartan_inv_ = invert(c);
        gram_inv_ = invert(gram_);
        if (cartan_inv_.empty() || gram_inv_.empty()) throw Error(ErrorKind::InvalidType, "singular Cartan matrix");
    }

    void generate_roots()
    {
        const int n = rank();
        std::set<RootVec> seen;
        std::deque<RootVec> queue;
        for (int i = 1; i <= n; ++i) {
            RootVec a(n, 0);
            a[i - 1] = 1;
            seen.insert(a);
            queue.push_back(a);
        }
        while (!queue.empty()) {
            RootVec b = queue.front();
            queue.pop_front();
            for (int i = 1; i <= n; ++i) {
                RootVec g = reflect(b, i);
                if (is_positive(g) && seen.insert(g).second) queue.push_back(std::move(g));
            }
            if (seen.size() > 100000) throw Error(ErrorKind::InvalidType, "Cartan matrix is not of finite type");
        }
        roots_.assign(seen.begin(), seen.end());
        std::sort(roots_.begin(), roots_.end(), [](const RootVec& a, const RootVec& b) {
            const int ha = height(a), hb = height(b);
            if (ha != hb) return ha < hb;
            return a > b;
        });
        for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = static_cast<int>(k);
    }

    void derive_symmetrizer()
    {
        const int n = rank();
        d_.assign(n, Rational(0));
        std::vector<int> comp(n, -1);
        components_ = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = components_;
            d_[s] = 1;
            std::deque<int> q{s};
            while (!q.empty()) {
                const int i = q.front();
                q.pop_front();
                for (int j = 0; j < n; ++j) {
                    if (j == i || cartan_[i][j] == 0) continue;
                    if (cartan_[j][i] == 0) throw Error(ErrorKind::InvalidType, "Cartan matrix not symmetrizable");
                    const Rational dj = d_[i] * cartan_[i][j] / cartan_[j][i];
                    if (comp[j] < 0) {
                        comp[j] = components_;
                        d_[j] = dj;
                        q.push_back(j);
                    } else if (d_[j] != dj) {
                        throw Error(ErrorKind::InvalidType, "Cartan matrix not symmetrizable");
                    }
                }
            }
            ++components_;
        }
        // Normalise each component so its longest roots have squared length 2.
        std::vector<Rational> longest(components_, Rational(0));
        for (const auto& b : roots_) {
            int c = -1;
            Rational len = 0;
            for (int i = 0; i < n; ++i) {
                if (b[i] == 0) continue;
                c = comp[i];
                for (int j = 0; j < n; ++j)
                    if (b[j] != 0) len += Rational(b[i] * b[j]) * d_[i] * cartan_[i][j];
            }
            longest[c] = std::max(longest[c], len);
        }
        for (int i = 0; i < n; ++i) d_[i] *= Rational(2) / longest[comp[i]];
    }

    std::optional<TypeLabel> label_;
    IntMatrix cartan_;
    std::vector<RootVec> roots_;
    std::map<RootVec, int> index_;
    RatVec d_;
    RatMatrix gram_;
    RatMatrix gram_inv_;
    RatMatrix cartan_inv_;
    int components_ = 0;
};

using SystemPtr = std::shared_ptr<const RootSystem>;

inline SystemPtr build_root_system(const TypeLabel& label) { return std::make_shared<const RootSystem>(label); }

inline SystemPtr build_root_system(std::string_view type) { return build_root_system(TypeLabel::parse(type)); }

/// Weight in the fundamental-weight basis.
struct WeightVec {
    RatVec fund;

    static WeightVec from_fund(const std::vector<int>& m) { return {RatVec(m.begin(), m.end())}; }

    static WeightVec fundamental(const RootSystem& sys, int i)
    {
        sys.check_index(i);
        std::vector<int> m(sys.rank(), 0);
        m[i - 1] = 1;
        return from_fund(m);
    }

    static WeightVec rho(const RootSystem& sys) { return from_fund(std::vector<int>(sys.rank(), 1)); }

    bool dominant() const
    {
        return std::all_of(fund.begin(), fund.end(), [](const Rational& q) { return q >= 0; });
    }

    bool integral() const { return std::all_of(fund.begin(), fund.end(), is_integer); }

    RatVec root_coords(const RootSystem& sys) const { return sys.to_root_coords(fund); }

    std::vector<long long> integer_fund() const
    {
        std::vector<long long> m;
        for (const auto& q : fund) m.push_back(q.numerator() / q.denominator());
        return m;
    }
};

} // namespace atomic
