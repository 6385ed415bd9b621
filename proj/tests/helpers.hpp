// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

// Shared generators and comparison helpers for the test suite.

#pragma once

#include <cmath>
#include <random>

#include "lorentz/core.hpp"
#include "lorentz/matrix.hpp"

namespace test_helpers {

/// Random orthogonal 4x4 built from Givens rotations over all index pairs;
/// orthogonal to machine precision by construction, independent of any
/// library factorization.
inline lorentz::Mat4 random_orthogonal4(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    lorentz::Mat4 v = lorentz::Mat4::identity();
    for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
            const double a = angle(rng);
            const double c = std::cos(a);
            const double s = std::sin(a);
            for (int r = 0; r < 4; ++r) {
                const double vp = v(r, p);
                const double vq = v(r, q);
                v(r, p) = c * vp - s * vq;
                v(r, q) = s * vp + c * vq;
            }
        }
    }
    return v;
}

/// Matrix with entries uniform in [-2, 2], rejecting |det| <= min_det.
inline lorentz::Mat4 random_invertible4(std::mt19937_64& rng, double min_det = 1e-6) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    while (true) {
        lorentz::Mat4 m;
        for (double& e : m.e) e = entry(rng);
        if (std::abs(m.det()) > min_det) return m;
    }
}

inline lorentz::Vec3 random_unit_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const lorentz::Vec3 d{gauss(rng), gauss(rng), gauss(rng)};
        const double n = lorentz::norm(d);
        if (n > 1e-6) return d * (1.0 / n);
    }
}

inline lorentz::Vec3 random_velocity(std::mt19937_64& rng, double min_speed, double max_speed) {
    std::uniform_real_distribution<double> speed(min_speed, max_speed);
    return random_unit_vector(rng) * speed(rng);
}

inline bool bitwise_equal(const lorentz::Mat4& a, const lorentz::Mat4& b) {
    for (std::size_t i = 0; i < 16; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

}  // namespace test_helpers
