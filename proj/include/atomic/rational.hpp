#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace atomic {

using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

/// Largest integer not exceeding q.
inline std::int64_t floor_of(const Rational& q)
{
    const std::int64_t n = q.numerator();
    const std::int64_t d = q.denominator();
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

inline std::string to_string(const Rational& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// Gauss-Jordan inverse of a square rational matrix; returns empty on singular input.
inline RatMatrix invert(RatMatrix a)
{
    const std::size_t n = a.size();
    RatMatrix inv(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].numerator() == 0) ++piv;
        if (piv == n) return {};
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].numerator() == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace atomic
