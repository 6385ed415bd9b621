// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "lorentz/core.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/polar.hpp"

namespace lorentz {

enum class FactorOrder {
    RotationBoost,  // L = L_R * L_v
    BoostRotation,  // L = L_{Rv} * L_R
};

/// Rotation-boost factor pair. The boost is carried as parameters (v, gamma)
/// rather than as a matrix; boost_matrix reconstructs the matrix, so the two
/// can never drift apart.
struct CartanFactors {
    RotationMatrix rotation;
    BoostParameters boost;
    FactorOrder order;
};

/// The product the factors claim to equal, in their declared order.
inline Mat4 reassemble(const CartanFactors& f) {
    const Mat4 r = rotation_embedding(f.rotation).matrix();
    const Mat4 b = boost_matrix(f.boost).matrix();
    return f.order == FactorOrder::RotationBoost ? r * b : b * r;
}

/// Velocity of the spatial origin of the frame L transforms to, seen from the
/// reference frame: v_i = -L(0,i) / L(0,0). Group membership guarantees
/// |v| < 1; this asserts instead of trusting and reports corrupted input.
inline BoostParameters extract_velocity(const LorentzMatrix& L) {
    const Mat4& m = L.matrix();
    // 0.0 - x rather than -x keeps zero components positive zero
    const Vec3 v{(0.0 - m(0, 1)) / m(0, 0), (0.0 - m(0, 2)) / m(0, 0), (0.0 - m(0, 3)) / m(0, 0)};
    const double speed = norm(v);
    if (speed >= kSpeedLimit) {
        throw InternalInvariantViolation(
            "extracted |v| = " + std::to_string(speed) +
            " is not below light speed; the input cannot be a valid Lorentz matrix");
    }
    return BoostParameters(v);
}

/// Rotation tolerance for the residual factor L * L_v^{-1}: the cancellation
/// in the product grows with rapidity, so the gate scales with L(0,0).
inline double shape_tolerance(const LorentzMatrix& L) { return 1e-9 * L.time_time(); }

/// Standard rotation-boost decomposition L = L_R * L_v: take v from the first
/// row, form L * L_v^{-1}, check it has the diag(1, R) shape, and validate R
/// as proper orthogonal.
inline CartanFactors rotation_boost_decompose(const LorentzMatrix& L) {
    const BoostParameters b = extract_velocity(L);
    const LorentzMatrix boost_inverse = boost_matrix(b.negated());
    const Mat4 candidate = (L * boost_inverse).matrix();

    const double tol = shape_tolerance(L);
    double worst = std::abs(candidate(0, 0) - 1.0);
    for (int i = 1; i < 4; ++i)
        worst = std::max({worst, std::abs(candidate(0, i)), std::abs(candidate(i, 0))});
    if (worst > tol) {
        std::ostringstream diag;
        diag << "time row/column of L * L_v^{-1}: [" << candidate(0, 0) << ", " << candidate(0, 1)
             << ", " << candidate(0, 2) << ", " << candidate(0, 3) << "] / [" << candidate(1, 0)
             << ", " << candidate(2, 0) << ", " << candidate(3, 0) << "]";
        throw ShapeViolation(diag.str(), worst, tol);
    }

    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = candidate(i + 1, j + 1);
    return CartanFactors{RotationMatrix::from_matrix(r), b, FactorOrder::RotationBoost};
}

/// Reversed-order factorization L = L_{Rv} * L_R: the same rotation, with the
/// boost velocity rotated, from the conjugation L_R L_v L_R^{-1} = L_{Rv}.
/// The rotated velocity R v equals -L(i,0)/L(0,0), since L_R leaves the first
/// column of L_{Rv} alone; reading it off there costs one division per
/// component instead of going through the extracted rotation, whose entries
/// carry gamma^2-amplified rounding.
inline CartanFactors boost_rotation_decompose(const LorentzMatrix& L) {
    const CartanFactors rb = rotation_boost_decompose(L);
    const Mat4& m = L.matrix();
    const Vec3 rotated{(0.0 - m(1, 0)) / m(0, 0), (0.0 - m(2, 0)) / m(0, 0),
                       (0.0 - m(3, 0)) / m(0, 0)};
    return CartanFactors{rb.rotation, BoostParameters(rotated), FactorOrder::BoostRotation};
}

/// Residuals of the factor-by-factor comparison between the polar and the
/// rotation-boost routes. verdict is true iff every residual is within the
/// tolerance it was checked against.
struct VerificationReport {
    double rotation_factor_residual = 0.0;  // max over UP and PU orders
    double boost_factor_residual = 0.0;     // max over UP and PU orders
    double group_residual = 0.0;            // ||L^T eta L - eta||
    double reassembly_residual = 0.0;       // max over both factor orders
    bool verdict = false;
};

/// The equivalence made executable: the polar decomposition L = U P, computed
/// with no knowledge of the group structure, must reproduce the rotation-boost
/// factors (U = L_R, P = L_v), and the reversed polar order L = P' U' must
/// reproduce the boost-rotation factors (U' = L_R, P' = L_{Rv}). The factors
/// are compared entrywise; extracting parameters from the polar factors would
/// presuppose the equivalence under test.
inline VerificationReport verify_moretti(const LorentzMatrix& L, double tol = kGroupTol) {
    const CartanFactors rb = rotation_boost_decompose(L);
    const CartanFactors br = boost_rotation_decompose(L);

    const Mat4 rotation_factor = rotation_embedding(rb.rotation).matrix();
    const Mat4 boost_up = boost_matrix(rb.boost).matrix();
    const Mat4 boost_pu = boost_matrix(br.boost).matrix();

    const PolarFactors up = polar_decompose(L.matrix(), PolarOrder::UP);
    const PolarFactors pu = polar_decompose(L.matrix(), PolarOrder::PU);

    VerificationReport report;
    report.rotation_factor_residual = std::max(max_abs_diff(up.u_factor, rotation_factor),
                                               max_abs_diff(pu.u_factor, rotation_factor));
    report.boost_factor_residual = std::max(max_abs_diff(up.p_factor, boost_up),
                                            max_abs_diff(pu.p_factor, boost_pu));
    report.group_residual = lorentz_group_residual(L.matrix());
    report.reassembly_residual = std::max(max_abs_diff(reassemble(rb), L.matrix()),
                                          max_abs_diff(reassemble(br), L.matrix()));
    report.verdict = report.rotation_factor_residual <= tol &&
                     report.boost_factor_residual <= tol && report.group_residual <= tol &&
                     report.reassembly_residual <= tol;
    return report;
}

/// Both sides of the positive-definiteness identity
///
///   (t, x^T) L_v (t, x)  ==  gamma (t - v.x)^2 + (1/gamma) (v.x)^2 / v^2
///                            + |x - ((v.x)/v^2) v|^2
///
/// returned for comparison by the caller. The right-hand side is undefined at
/// v = 0 (where the form is simply t^2 + |x|^2).
struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

inline IdentitySides positive_definiteness_identity_check(const Vec3& v, const FourVector& w) {
    const double v2 = norm_squared(v);
    if (v2 == 0.0) throw ZeroVelocity();
    const BoostParameters b(v);

    IdentitySides sides;
    sides.lhs = quadratic_form(boost_matrix(b).matrix(), w);

    const double gamma = b.gamma();
    const double vx = dot(v, w.x);
    const Vec3 transverse = w.x - (vx / v2) * v;
    sides.rhs = gamma * (w.t - vx) * (w.t - vx) + (vx * vx) / (gamma * v2) +
                norm_squared(transverse);
    return sides;
}

}  // namespace lorentz
