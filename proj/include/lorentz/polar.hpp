// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

#include "lorentz/errors.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/sym_eig4.hpp"

namespace lorentz {

enum class PolarOrder {
    UP,  // M = U P
    PU,  // M = P U
};

/// Polar factors of an invertible 4x4 matrix: U orthogonal, P symmetric
/// positive-definite, with M = U P (order UP) or M = P U (order PU). The
/// factors of an invertible matrix are unique.
struct PolarFactors {
    Mat4 u_factor;
    Mat4 p_factor;
    PolarOrder order = PolarOrder::UP;
};

namespace detail {

/// Eigenvalues of M^T M (or M M^T) below this are treated as singular rather
/// than clamped; clamping would hide bugs, and the Lorentz use case never
/// approaches singularity.
inline constexpr double kSingularEigenvalue = 1e-24;

/// sqrt(S) and sqrt(S)^{-1} from one eigendecomposition. Both are bitwise
/// symmetric because entry (i,j) and (j,i) sum the same products in the same
/// order.
inline void sqrt_and_inverse_sqrt(const Mat4& s, Mat4& root, Mat4& inverse_root) {
    const SymEig4 eig = sym_eig4(s);
    std::array<double, 4> sq{};
    for (int k = 0; k < 4; ++k) {
        const double lambda = eig.eigenvalues[static_cast<std::size_t>(k)];
        if (lambda < kSingularEigenvalue)
            throw SingularMatrix("eigenvalue " + std::to_string(lambda) +
                                 " of the Gram matrix is below 1e-24");
        sq[static_cast<std::size_t>(k)] = std::sqrt(lambda);
    }
    const Mat4& v = eig.eigenvectors;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double a = 0.0;
            double b = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double prod = v(i, k) * v(j, k);
                a += sq[static_cast<std::size_t>(k)] * prod;
                b += prod / sq[static_cast<std::size_t>(k)];
            }
            root(i, j) = a;
            inverse_root(i, j) = b;
        }
    }
}

inline void require_invertible(const Mat4& m) {
    if (!is_finite(m)) throw NonFiniteInput();
    const double d = m.det();
    if (std::abs(d) <= 1e-12) throw SingularMatrix("|det| = " + std::to_string(std::abs(d)));
}

}  // namespace detail

/// Polar decomposition through the eigendecomposition of the Gram matrix:
/// order UP takes P = sqrt(M^T M), U = M P^{-1}; order PU takes
/// P' = sqrt(M M^T), U' = P'^{-1} M. Deterministic: same input, same bits.
inline PolarFactors polar_decompose(const Mat4& m, PolarOrder order = PolarOrder::UP) {
    detail::require_invertible(m);

    // Gram matrix; entry (i,j) and (j,i) are the same dot product, so it is
    // bitwise symmetric.
    Mat4 gram;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += (order == PolarOrder::UP) ? m(k, i) * m(k, j)   // M^T M
                                               : m(i, k) * m(j, k);  // M M^T
            gram(i, j) = s;
        }
    }

    Mat4 root;
    Mat4 inverse_root;
    detail::sqrt_and_inverse_sqrt(gram, root, inverse_root);

    PolarFactors f;
    f.order = order;
    f.p_factor = root;
    f.u_factor = (order == PolarOrder::UP) ? m * inverse_root : inverse_root * m;
    return f;
}

/// Independent route to the same factors: Newton iteration
/// X <- (X + X^{-T}) / 2 from X_0 = M, stopping when successive iterates agree
/// to 1e-14 or after 100 steps. Returns order UP with P symmetrized from U^T M.
/// Kept solely as a cross-check oracle for polar_decompose. The step count is
/// reported through iterations_out when a caller wants it.
inline PolarFactors newton_polar(const Mat4& m, int* iterations_out = nullptr) {
    detail::require_invertible(m);

    Mat4 x = m;
    double delta = 0.0;
    bool converged = false;
    int iterations = 0;
    for (int k = 1; k <= 100; ++k) {
        const Mat4 next = (x + x.inverse().transposed()) * 0.5;
        delta = max_abs_diff(next, x);
        x = next;
        iterations = k;
        if (delta <= 1e-14) {
            converged = true;
            break;
        }
    }
    if (iterations_out) *iterations_out = iterations;
    if (!converged) throw NoConvergence(iterations, delta);

    PolarFactors f;
    f.order = PolarOrder::UP;
    f.u_factor = x;
    const Mat4 p = x.transposed() * m;
    f.p_factor = (p + p.transposed()) * 0.5;
    return f;
}

}  // namespace lorentz
