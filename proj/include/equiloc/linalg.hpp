#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

using LatticeVector = std::vector<std::int64_t>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational dot(const RationalVector& x, const LatticeVector& v) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * Rational(v[i]);
    return s;
}

inline std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline bool is_zero_vector(const LatticeVector& v) {
    for (auto x : v)
        if (x != 0)
            return false;
    return true;
}

inline std::int64_t content(const LatticeVector& v) {
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

/// Divides by the gcd of the entries; direction is preserved.
inline LatticeVector primitive(LatticeVector v) {
    std::int64_t g = content(v);
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

/// Scales a rational direction vector to its primitive integer multiple.
inline LatticeVector primitive_direction(const RationalVector& d) {
    BigInt lcm_den(1);
    for (const auto& c : d)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    std::vector<BigInt> w(d.size());
    BigInt g(0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        w[i] = numerator(d[i]) * (lcm_den / denominator(d[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    LatticeVector out(d.size(), 0);
    if (g == 0)
        return out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out[i] = static_cast<std::int64_t>(w[i] / g);
    return out;
}

/// Gaussian elimination with exact arithmetic. Returns the unique solution
/// of A x = b, or nullopt when A is singular.
inline std::optional<RationalVector> solve_linear(RationalMatrix A,
                                                  RationalVector b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0)
                continue;
            Rational f = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k)
                A[row][k] -= f * A[col][k];
            b[row] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / A[i][i];
    return x;
}

inline Rational det(RationalMatrix A) {
    const std::size_t n = A.size();
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            std::swap(A[pivot], A[col]);
            d = -d;
        }
        d *= A[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (A[row][col] == 0)
                continue;
            Rational f = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k)
                A[row][k] -= f * A[col][k];
        }
    }
    return d;
}

inline Rational det_lattice(const std::vector<LatticeVector>& rows) {
    RationalMatrix A(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto x : rows[i])
            A[i].push_back(Rational(x));
    return det(A);
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& A) {
    const std::size_t n = A.size();
    RationalMatrix M = A;
    RationalMatrix inv(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && M[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(M[pivot], M[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = M[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            M[col][k] /= p;
            inv[col][k] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || M[row][col] == 0)
                continue;
            Rational f = M[row][col];
            for (std::size_t k = 0; k < n; ++k) {
                M[row][k] -= f * M[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

/// Rank of the affine hull of a point set.
inline std::size_t affine_rank(const std::vector<RationalVector>& points) {
    if (points.size() <= 1)
        return 0;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(points[i].size());
        for (std::size_t k = 0; k < d.size(); ++k)
            d[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(d));
    }
    // row echelon rank
    std::size_t rank = 0;
    const std::size_t rows = diffs.size(), cols = diffs[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && diffs[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(diffs[pivot], diffs[rank]);
        for (std::size_t row = rank + 1; row < rows; ++row) {
            if (diffs[row][col] == 0)
                continue;
            Rational f = diffs[row][col] / diffs[rank][col];
            for (std::size_t k = col; k < cols; ++k)
                diffs[row][k] -= f * diffs[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace equiloc
