// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "lorentz/errors.hpp"
#include "lorentz/matrix.hpp"

namespace lorentz {

// Conventions, fixed once for the whole library: row-major storage, time
// index 0, metric signature (-,+,+,+), c = 1 so speeds are dimensionless.

/// Membership tolerance for externally supplied matrices.
inline constexpr double kGroupTol = 1e-9;

/// Residual tolerance for internally constructed or composed matrices at
/// moderate rapidity (|v| <= 0.99). Conditioning degrades like gamma^2, so
/// external data gets the looser kGroupTol gate.
inline constexpr double kResidualTol = 1e-12;

/// Constructors reject |v| >= this; beyond it gamma exceeds 1e6 and residual
/// guarantees are meaningless.
inline constexpr double kSpeedLimit = 1.0 - 1e-12;

/// Minkowski metric eta = diag(-1, +1, +1, +1). eta^2 = 1 and eta^T = eta.
inline constexpr Mat4 kMinkowskiMetric{
    {-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}};

/// eta * m * eta without forming products: flips the sign of the time-space
/// row and column.
inline Mat4 eta_conjugate(const Mat4& m) {
    Mat4 r = m;
    for (int i = 1; i < 4; ++i) {
        r(0, i) = -r(0, i);
        r(i, 0) = -r(i, 0);
    }
    return r;
}

/// ||m^T eta m - eta||, the defect of the Lorentz condition.
inline double lorentz_group_residual(const Mat4& m) {
    return max_abs_diff(m.transposed() * kMinkowskiMetric * m, kMinkowskiMetric);
}

enum class LorentzClass {
    ProperOrthochronous,
    ProperAntichronous,
    ImproperOrthochronous,
    ImproperAntichronous,
    NotLorentzGroup,
};

inline const char* to_string(LorentzClass c) {
    switch (c) {
        case LorentzClass::ProperOrthochronous: return "ProperOrthochronous";
        case LorentzClass::ProperAntichronous: return "ProperAntichronous";
        case LorentzClass::ImproperOrthochronous: return "ImproperOrthochronous";
        case LorentzClass::ImproperAntichronous: return "ImproperAntichronous";
        case LorentzClass::NotLorentzGroup: return "NotLorentz";
    }
    return "NotLorentz";
}

/// Outcome of validate_lorentz. For NotLorentz the residual is the diagnosis;
/// for group members it records which of the four components m lies in.
struct LorentzClassification {
    LorentzClass kind = LorentzClass::NotLorentzGroup;
    double group_residual = 0.0;  // ||m^T eta m - eta||
    double determinant = 0.0;
    double time_time = 0.0;  // m(0,0)

    bool is_proper_orthochronous() const { return kind == LorentzClass::ProperOrthochronous; }
};

/// Classifies m against the Lorentz condition at the given tolerance, then by
/// sign of det (proper/improper) and sign of m(0,0) (orthochronous/antichronous).
inline LorentzClassification validate_lorentz(const Mat4& m, double tol = kGroupTol) {
    if (!is_finite(m)) throw NonFiniteInput();
    LorentzClassification c;
    c.group_residual = lorentz_group_residual(m);
    c.determinant = m.det();
    c.time_time = m(0, 0);
    if (c.group_residual > tol) {
        c.kind = LorentzClass::NotLorentzGroup;
    } else if (c.determinant > 0.0) {
        c.kind = c.time_time > 0.0 ? LorentzClass::ProperOrthochronous
                                   : LorentzClass::ProperAntichronous;
    } else {
        c.kind = c.time_time > 0.0 ? LorentzClass::ImproperOrthochronous
                                   : LorentzClass::ImproperAntichronous;
    }
    return c;
}

/// Boost velocity v with |v| < 1 and its Lorentz factor gamma = (1-v^2)^{-1/2}.
/// gamma is always recomputed from v here; callers cannot supply an
/// inconsistent pair.
class BoostParameters {
  public:
    explicit BoostParameters(const Vec3& velocity) : v_(velocity) {
        if (!is_finite(velocity)) throw NonFiniteInput();
        const double v2 = norm_squared(velocity);
        if (std::sqrt(v2) >= kSpeedLimit) throw VelocityOutOfRange(std::sqrt(v2));
        gamma_ = 1.0 / std::sqrt(1.0 - v2);
    }

    const Vec3& velocity() const { return v_; }
    double gamma() const { return gamma_; }
    double speed() const { return norm(v_); }

    BoostParameters negated() const { return BoostParameters(-v_); }

  private:
    Vec3 v_;
    double gamma_;
};

/// Proper orthogonal 3x3 matrix (SO(3)), validated at construction.
class RotationMatrix {
  public:
    static RotationMatrix from_matrix(const Mat3& r, double tol = kGroupTol) {
        if (!is_finite(r)) throw NonFiniteInput();
        const double residual = max_abs_diff(r.transposed() * r, Mat3::identity());
        if (residual > tol) throw NotARotation("R^T R deviates from identity", residual);
        const double d = r.det();
        if (std::abs(d - 1.0) > tol) throw NotARotation("det R = " + std::to_string(d), std::abs(d - 1.0));
        return RotationMatrix(r);
    }

    /// Rodrigues formula; the axis need not be normalized.
    static RotationMatrix from_axis_angle(const Vec3& axis, double angle) {
        const double len = norm(axis);
        if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(angle))
            throw NotARotation("axis must be a finite nonzero vector", len);
        const Vec3 n = axis * (1.0 / len);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const double k = 1.0 - c;
        Mat3 r{{c + n.x * n.x * k, n.x * n.y * k - n.z * s, n.x * n.z * k + n.y * s,
                n.y * n.x * k + n.z * s, c + n.y * n.y * k, n.y * n.z * k - n.x * s,
                n.z * n.x * k - n.y * s, n.z * n.y * k + n.x * s, c + n.z * n.z * k}};
        return RotationMatrix(r);
    }

    /// Unit quaternion (w, x, y, z) -> rotation matrix; normalizes the input.
    static RotationMatrix from_quaternion(double w, double x, double y, double z) {
        const double n = std::sqrt(w * w + x * x + y * y + z * z);
        if (!(n > 0.0) || !std::isfinite(n)) throw NotARotation("quaternion must be nonzero", n);
        w /= n; x /= n; y /= n; z /= n;
        Mat3 r{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
                2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
                2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
        return RotationMatrix(r);
    }

    static RotationMatrix identity() { return RotationMatrix(Mat3::identity()); }

    const Mat3& matrix() const { return r_; }

    RotationMatrix transposed() const { return RotationMatrix(r_.transposed()); }

    // Group composition; closure keeps the invariants without revalidation.
    RotationMatrix operator*(const RotationMatrix& o) const { return RotationMatrix(r_ * o.r_); }

    Vec3 operator*(const Vec3& v) const { return r_ * v; }

  private:
    explicit RotationMatrix(const Mat3& r) : r_(r) {}
    Mat3 r_;
};

/// Member of the proper orthochronous Lorentz group L+^up: L^T eta L = eta,
/// det L = +1, L(0,0) >= 1. Validated when built from a raw matrix; trusted
/// when produced by the constructors and compositions in this library.
class LorentzMatrix {
  public:
    static LorentzMatrix from_matrix(const Mat4& m, double tol = kGroupTol) {
        const LorentzClassification c = validate_lorentz(m, tol);
        if (!c.is_proper_orthochronous())
            throw NotLorentz(to_string(c.kind), c.group_residual, c.determinant, c.time_time);
        return LorentzMatrix(m);
    }

    static LorentzMatrix identity() { return LorentzMatrix(Mat4::identity()); }

    const Mat4& matrix() const { return m_; }

    /// L(0,0), the Lorentz factor of the transformation.
    double time_time() const { return m_(0, 0); }

    // Group composition without revalidation.
    LorentzMatrix operator*(const LorentzMatrix& o) const { return LorentzMatrix(m_ * o.m_); }

    FourVector operator*(const FourVector& w) const {
        FourVector r;
        for (int i = 0; i < 4; ++i) {
            double s = 0.0;
            for (int j = 0; j < 4; ++j) s += m_(i, j) * w[j];
            r[i] = s;
        }
        return r;
    }

  private:
    friend LorentzMatrix boost_matrix(const BoostParameters&);
    friend LorentzMatrix rotation_embedding(const RotationMatrix&);
    friend LorentzMatrix lorentz_inverse(const LorentzMatrix&);
    explicit LorentzMatrix(const Mat4& m) : m_(m) {}
    Mat4 m_;
};

/// Pure boost
///
///   L_v = [ gamma          -gamma v^T                    ]
///         [ -gamma v        1 + gamma^2/(1+gamma) v v^T  ]
///
/// Symmetric by construction (mirror entries are assigned from one
/// expression). v = 0 yields the exact identity since the rank-1 term
/// vanishes entrywise.
inline LorentzMatrix boost_matrix(const BoostParameters& b) {
    const Vec3& v = b.velocity();
    const double gamma = b.gamma();
    const double coef = gamma * gamma / (1.0 + gamma);
    Mat4 m = Mat4::identity();
    m(0, 0) = gamma;
    for (int i = 0; i < 3; ++i) {
        const double ts = -gamma * v[i];
        m(0, i + 1) = ts;
        m(i + 1, 0) = ts;
        for (int j = i; j < 3; ++j) {
            const double s = (i == j ? 1.0 : 0.0) + coef * (v[i] * v[j]);
            m(i + 1, j + 1) = s;
            m(j + 1, i + 1) = s;
        }
    }
    return LorentzMatrix(m);
}

inline LorentzMatrix boost_matrix(const Vec3& velocity) {
    return boost_matrix(BoostParameters(velocity));
}

/// Spatial rotation embedded as diag(1, R); orthogonal both as a 4x4 matrix
/// and in the Lorentz sense.
inline LorentzMatrix rotation_embedding(const RotationMatrix& rot) {
    const Mat3& r = rot.matrix();
    Mat4 m = Mat4::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i + 1, j + 1) = r(i, j);
    return LorentzMatrix(m);
}

/// L^{-1} = eta L^T eta, exact up to sign flips of the time-space blocks.
inline LorentzMatrix lorentz_inverse(const LorentzMatrix& L) {
    return LorentzMatrix(eta_conjugate(L.matrix().transposed()));
}

/// Index-lowered components of a unit timelike future-pointing 4-velocity:
/// u eta^{-1} u = -1 and u[0] < 0.
class FrameCovector {
  public:
    static FrameCovector from_components(const std::array<double, 4>& u, double tol = kGroupTol) {
        for (double c : u)
            if (!std::isfinite(c)) throw NonFiniteInput();
        // eta^{-1} = eta
        const double n = -u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
        if (std::abs(n + 1.0) > tol) throw NotUnitTimelike(n);
        // contraction with the canonical frame's 4-velocity (1,0,0,0) is u[0]
        if (!(u[0] < 0.0)) throw NotUnitTimelike(n);
        return FrameCovector(u);
    }

    /// Lowered 4-velocity of a frame moving with velocity v: eta (gamma, gamma v).
    static FrameCovector from_velocity(const Vec3& v) {
        const BoostParameters b(v);
        const double g = b.gamma();
        return FrameCovector({-g, g * v.x, g * v.y, g * v.z});
    }

    /// The canonical frame: u = (-1, 0, 0, 0).
    static FrameCovector canonical() { return FrameCovector({-1.0, 0.0, 0.0, 0.0}); }

    double operator[](int i) const { return u_[static_cast<std::size_t>(i)]; }
    const std::array<double, 4>& components() const { return u_; }

  private:
    explicit FrameCovector(const std::array<double, 4>& u) : u_(u) {}
    std::array<double, 4> u_;
};

/// The Euclidean metric a frame singles out on Minkowski space: eta + 2 u (x) u.
/// Symmetric positive-definite; the canonical frame gives exactly the identity.
inline Mat4 hilbert_metric(const FrameCovector& u) {
    Mat4 h = kMinkowskiMetric;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) += 2.0 * (u[i] * u[j]);
    return h;
}

/// (t, x^T) L (t, x) as a scalar.
inline double quadratic_form(const Mat4& L, const FourVector& w) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += w[i] * L(i, j) * w[j];
    return s;
}

}  // namespace lorentz
