// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "lorentz/errors.hpp"

namespace lorentz {

/// 3-vector with components in units of c (dimensionless throughout).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> e{};

    double operator()(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }
    double& operator()(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }

    static constexpr Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Mat3 transposed() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    double det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 p;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(r, k) * o(k, c);
                p(r, c) = s;
            }
        return p;
    }

    Vec3 operator*(const Vec3& v) const {
        Vec3 w;
        for (int r = 0; r < 3; ++r) w[r] = (*this)(r, 0) * v.x + (*this)(r, 1) * v.y + (*this)(r, 2) * v.z;
        return w;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 s;
        for (std::size_t i = 0; i < 9; ++i) s.e[i] = e[i] + o.e[i];
        return s;
    }

    Mat3 operator-(const Mat3& o) const {
        Mat3 s;
        for (std::size_t i = 0; i < 9; ++i) s.e[i] = e[i] - o.e[i];
        return s;
    }
};

/// Row-major 4x4 matrix; index 0 is the time row/column.
struct Mat4 {
    std::array<double, 16> e{};

    double operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }
    double& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }

    static constexpr Mat4 identity() {
        return {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}};
    }

    Mat4 transposed() const {
        Mat4 t;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat4 operator*(const Mat4& o) const {
        Mat4 p;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
                p(r, c) = s;
            }
        return p;
    }

    Mat4 operator+(const Mat4& o) const {
        Mat4 s;
        for (std::size_t i = 0; i < 16; ++i) s.e[i] = e[i] + o.e[i];
        return s;
    }

    Mat4 operator-(const Mat4& o) const {
        Mat4 s;
        for (std::size_t i = 0; i < 16; ++i) s.e[i] = e[i] - o.e[i];
        return s;
    }

    Mat4 operator*(double s) const {
        Mat4 m = *this;
        for (double& v : m.e) v *= s;
        return m;
    }

    /// Determinant by expansion in 2x2 minors of the first two rows.
    double det() const {
        const Mat4& m = *this;
        const double s0 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const double s1 = m(0, 0) * m(1, 2) - m(0, 2) * m(1, 0);
        const double s2 = m(0, 0) * m(1, 3) - m(0, 3) * m(1, 0);
        const double s3 = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
        const double s4 = m(0, 1) * m(1, 3) - m(0, 3) * m(1, 1);
        const double s5 = m(0, 2) * m(1, 3) - m(0, 3) * m(1, 2);
        const double c5 = m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2);
        const double c4 = m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1);
        const double c3 = m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1);
        const double c2 = m(2, 0) * m(3, 3) - m(2, 3) * m(3, 0);
        const double c1 = m(2, 0) * m(3, 2) - m(2, 2) * m(3, 0);
        const double c0 = m(2, 0) * m(3, 1) - m(2, 1) * m(3, 0);
        return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    /// Throws SingularMatrix on an exactly zero pivot.
    Mat4 inverse() const {
        Mat4 a = *this;
        Mat4 inv = identity();
        for (int col = 0; col < 4; ++col) {
            int pivot = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
            if (a(pivot, col) == 0.0) throw SingularMatrix("zero pivot in Gauss-Jordan elimination");
            if (pivot != col) {
                for (int c = 0; c < 4; ++c) {
                    std::swap(a(pivot, c), a(col, c));
                    std::swap(inv(pivot, c), inv(col, c));
                }
            }
            const double scale = 1.0 / a(col, col);
            for (int c = 0; c < 4; ++c) {
                a(col, c) *= scale;
                inv(col, c) *= scale;
            }
            for (int r = 0; r < 4; ++r) {
                if (r == col) continue;
                const double f = a(r, col);
                if (f == 0.0) continue;
                for (int c = 0; c < 4; ++c) {
                    a(r, c) -= f * a(col, c);
                    inv(r, c) -= f * inv(col, c);
                }
            }
        }
        return inv;
    }
};

/// Four-vector (t, x) with the time component first.
struct FourVector {
    double t = 0.0;
    Vec3 x;

    double operator[](int i) const { return i == 0 ? t : x[i - 1]; }
    double& operator[](int i) { return i == 0 ? t : x[i - 1]; }
};

inline bool is_finite(const FourVector& w) { return std::isfinite(w.t) && is_finite(w.x); }

inline bool is_finite(const Mat3& m) {
    for (double v : m.e)
        if (!std::isfinite(v)) return false;
    return true;
}

inline bool is_finite(const Mat4& m) {
    for (double v : m.e)
        if (!std::isfinite(v)) return false;
    return true;
}

/// Largest absolute entry. All tolerances in this library are entrywise.
inline double inf_norm(const Mat3& m) {
    double n = 0.0;
    for (double v : m.e) n = std::max(n, std::abs(v));
    return n;
}

inline double inf_norm(const Mat4& m) {
    double n = 0.0;
    for (double v : m.e) n = std::max(n, std::abs(v));
    return n;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) { return inf_norm(a - b); }
inline double max_abs_diff(const Mat4& a, const Mat4& b) { return inf_norm(a - b); }

}  // namespace lorentz
