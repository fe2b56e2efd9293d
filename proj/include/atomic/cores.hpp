#pragma once

#include "atomic/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace atomic {

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw Error(ErrorKind::PreconditionViolation, "partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorKind::PreconditionViolation, "partition must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const
    {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int part(int r) const { return r < length() ? parts_[r] : 0; }

    Partition conjugate() const
    {
        std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    /// First-column hook lengths, strictly decreasing.
    std::vector<int> beta_numbers() const
    {
        std::vector<int> b;
        const int l = length();
        for (int r = 0; r < l; ++r) b.push_back(parts_[r] + l - 1 - r);
        return b;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Hook length of every cell, row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& p)
{
    const Partition c = p.conjugate();
    std::vector<std::vector<int>> h;
    for (int r = 0; r < p.length(); ++r) {
        std::vector<int> row;
        for (int col = 0; col < p.part(r); ++col) row.push_back((p.part(r) - col - 1) + (c.part(col) - r - 1) + 1);
        h.push_back(std::move(row));
    }
    return h;
}

inline void check_modulus(int m)
{
    if (m < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be at least 2");
}

/// No hook length divisible by m, via beta-numbers: b in B and b >= m imply b - m in B.
inline bool is_core(const Partition& p, int m)
{
    check_modulus(m);
    const auto b = p.beta_numbers();
    const std::set<int> bs(b.begin(), b.end());
    for (int x : b)
        if (x >= m && !bs.count(x - m)) return false;
    return true;
}

/// Residue of cell (r, c), 0-based: (c - r) mod m.
inline int residue(int r, int c, int m) { return ((c - r) % m + m) % m; }

/// Add every addable i-cell if there is one, else remove every removable i-cell.
inline Partition residue_reflect(const Partition& p, int i, int n)
{
    const int m = n + 1;
    check_modulus(m);
    if (i < 0 || i > n) throw Error(ErrorKind::InvalidIndex, "residue outside 0..n");
    if (!is_core(p, m)) throw Error(ErrorKind::NotACore, "partition is not an (n+1)-core");
    std::vector<int> parts = p.parts();
    const int l = p.length();
    std::vector<int> add_rows, rem_rows;
    for (int r = 0; r <= l; ++r) {
        const int len = p.part(r);
        if ((r == 0 || p.part(r - 1) > len) && residue(r, len, m) == i) add_rows.push_back(r);
        if (len > 0 && p.part(r + 1) < len && residue(r, len - 1, m) == i) rem_rows.push_back(r);
    }
    if (!add_rows.empty()) {
        for (int r : add_rows) {
            if (r == static_cast<int>(parts.size()))
                parts.push_back(1);
            else
                ++parts[r];
        }
    } else {
        for (int r : rem_rows) --parts[r];
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    return Partition(std::move(parts));
}

/// Residues with at least one addable cell.
inline std::vector<int> addable_residues(const Partition& p, int n)
{
    const int m = n + 1;
    std::set<int> s;
    for (int r = 0; r <= p.length(); ++r) {
        const int len = p.part(r);
        if (r == 0 || p.part(r - 1) > len) s.insert(residue(r, len, m));
    }
    return {s.begin(), s.end()};
}

struct CoreLimits {
    int max_size = 2000;
    std::uint64_t max_cores = 20'000'000;
};

/// All (n+1)-cores of size <= max_size, by size, each list sorted.
inline std::map<int, std::vector<Partition>> orbit_cores(int n, int max_size, const CoreLimits& lim = {})
{
    if (n < 1) throw Error(ErrorKind::InvalidModulus, "n must be at least 1");
    if (max_size < 0 || max_size > lim.max_size)
        throw Error(ErrorKind::SizeTooLarge, "max size " + std::to_string(max_size) + " exceeds " + std::to_string(lim.max_size));
    std::map<int, std::vector<Partition>> out;
    std::map<int, std::vector<Partition>> pending;
    pending[0].push_back(Partition());
    std::uint64_t total = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        auto& level = node.mapped();
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        total += level.size();
        if (total > lim.max_cores) throw Error(ErrorKind::SizeTooLarge, "too many cores");
        for (const auto& p : level)
            for (int i : addable_residues(p, n)) {
                Partition q = residue_reflect(p, i, n);
                if (q.size() <= max_size) pending[q.size()].push_back(std::move(q));
            }
        out[node.key()] = std::move(level);
    }
    return out;
}

/// Number of (n+1)-cores of each size <= max_size.
inline std::map<int, std::uint64_t> core_size_counts(int n, int max_size, const CoreLimits& lim = {})
{
    std::map<int, std::uint64_t> c;
    for (const auto& [s, list] : orbit_cores(n, max_size, lim)) c[s] = list.size();
    return c;
}

/// Number of beta in the A_n root lattice with ((n+1)/2)|beta|^2 - ht(beta) = N, for every N <= max_size.
inline std::map<int, std::uint64_t> lattice_size_counts(int n, int max_size)
{
    const RootSystem sys(TypeLabel{'A', n, false});
    const double rho_norm = std::sqrt(boost::rational_cast<double>(sys.inner_product(sys.rho(), sys.rho())));
    const double r = (rho_norm + std::sqrt(rho_norm * rho_norm + 2.0 * (n + 1) * max_size)) / (n + 1) + 1e-9;
    std::vector<long long> box(n);
    for (int i = 0; i < n; ++i)
        box[i] = static_cast<long long>(std::floor(r * std::sqrt(boost::rational_cast<double>(sys.gram_inverse()[i][i])) + 1e-9));
    std::map<int, std::uint64_t> counts;
    std::vector<long long> c(n);
    for (int i = 0; i < n; ++i) c[i] = -box[i];
    const auto& g = sys.gram();
    for (;;) {
        long long q = 0, h = 0;
        for (int i = 0; i < n; ++i) {
            h += c[i];
            for (int j = 0; j < n; ++j) q += c[i] * c[j] * g[i][j].numerator();
        }
        // q = |beta|^2 (the A_n form is integral); value = (n+1) q / 2 - ht.
        const long long twice = (n + 1) * q - 2 * h;
        if (twice % 2 == 0 && twice / 2 <= max_size) ++counts[static_cast<int>(twice / 2)];
        int k = 0;
        while (k < n && c[k] == box[k]) {
            c[k] = -box[k];
            ++k;
        }
        if (k == n) break;
        ++c[k];
    }
    return counts;
}

/// (number of (n+1)-cores of size N, number of lattice points of level-one value N).
inline std::pair<std::uint64_t, std::uint64_t> core_count_vs_lattice(int n, int N)
{
    const auto cores = core_size_counts(n, N);
    const auto lat = lattice_size_counts(n, N);
    auto get = [N](const std::map<int, std::uint64_t>& m) {
        auto it = m.find(N);
        return it == m.end() ? std::uint64_t(0) : it->second;
    };
    return {get(cores), get(lat)};
}

/// All partitions of N, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int N)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, N, N);
    return out;
}

} // namespace atomic
