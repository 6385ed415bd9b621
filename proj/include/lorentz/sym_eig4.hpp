// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "lorentz/core.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/matrix.hpp"

namespace lorentz {

/// Eigendecomposition S = V diag(lambda) V^T of a symmetric 4x4 matrix.
/// Eigenvalues descending; eigenvector columns orthonormal, each sign-fixed so
/// its first nonzero component is positive. Exactly equal eigenvalues are
/// ordered by descending lexicographic comparison of their sign-fixed
/// eigenvectors, which makes the output bitwise deterministic.
struct SymEig4 {
    std::array<double, 4> eigenvalues{};
    Mat4 eigenvectors;  // columns
};

/// Cyclic Jacobi with fixed sweep order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3),
/// repeated until the largest off-diagonal entry falls below 1e-15 ||S|| or 30
/// sweeps have run. Throws NotSymmetric if ||S - S^T|| > kGroupTol.
inline SymEig4 sym_eig4(const Mat4& s_in) {
    if (!is_finite(s_in)) throw NonFiniteInput();
    const double asym = max_abs_diff(s_in, s_in.transposed());
    if (asym > kGroupTol) throw NotSymmetric(asym);

    Mat4 s = s_in;
    Mat4 v = Mat4::identity();
    const double off_threshold = 1e-15 * inf_norm(s_in);

    constexpr std::array<std::array<int, 2>, 6> kSweep{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    auto max_off_diagonal = [](const Mat4& m) {
        double off = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (r != c) off = std::max(off, std::abs(m(r, c)));
        return off;
    };

    for (int sweep = 0; sweep < 30 && max_off_diagonal(s) > off_threshold; ++sweep) {
        for (const auto& [p, q] : kSweep) {
            const double spq = s(p, q);
            if (spq == 0.0) continue;
            // symmetric Schur rotation annihilating s(p,q)
            const double tau = (s(q, q) - s(p, p)) / (2.0 * spq);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double sn = t * c;

            const double spp = s(p, p);
            const double sqq = s(q, q);
            s(p, p) = spp - t * spq;
            s(q, q) = sqq + t * spq;
            s(p, q) = 0.0;
            s(q, p) = 0.0;
            for (int k = 0; k < 4; ++k) {
                if (k == p || k == q) continue;
                const double skp = s(k, p);
                const double skq = s(k, q);
                s(k, p) = c * skp - sn * skq;
                s(p, k) = s(k, p);
                s(k, q) = sn * skp + c * skq;
                s(q, k) = s(k, q);
            }
            for (int k = 0; k < 4; ++k) {
                const double vkp = v(k, p);
                const double vkq = v(k, q);
                v(k, p) = c * vkp - sn * vkq;
                v(k, q) = sn * vkp + c * vkq;
            }
        }
    }

    // Sign-fix each column, then order.
    std::array<std::array<double, 4>, 4> cols{};
    for (int j = 0; j < 4; ++j) {
        double sign = 1.0;
        for (int i = 0; i < 4; ++i) {
            if (v(i, j) != 0.0) {
                sign = v(i, j) > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (int i = 0; i < 4; ++i) cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = sign * v(i, j);
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double la = s(a, a);
        const double lb = s(b, b);
        if (la != lb) return la > lb;
        return cols[static_cast<std::size_t>(a)] > cols[static_cast<std::size_t>(b)];
    });

    SymEig4 out;
    for (int j = 0; j < 4; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        out.eigenvalues[static_cast<std::size_t>(j)] = s(src, src);
        for (int i = 0; i < 4; ++i)
            out.eigenvectors(i, j) = cols[static_cast<std::size_t>(src)][static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace lorentz
