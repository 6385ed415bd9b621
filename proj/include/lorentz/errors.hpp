// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A boost velocity with |v| >= 1 - 1e-12 was supplied; gamma would not be
/// finite and representable.
class VelocityOutOfRange : public Error {
  public:
    explicit VelocityOutOfRange(double speed)
        : Error("speed must satisfy |v| < 1 (got |v| = " + std::to_string(speed) + ")"),
          speed_(speed) {}
    double speed() const { return speed_; }

  private:
    double speed_;
};

/// A 3x3 matrix failed the proper-orthogonality check (R^T R = 1, det R = +1).
class NotARotation : public Error {
  public:
    NotARotation(const std::string& reason, double residual)
        : Error("not a proper rotation: " + reason), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

/// A frame covector whose Minkowski norm is not -1 within tolerance.
class NotUnitTimelike : public Error {
  public:
    explicit NotUnitTimelike(double norm)
        : Error("covector is not unit timelike: eta-norm = " + std::to_string(norm) +
                ", expected -1"),
          norm_(norm) {}
    double norm() const { return norm_; }

  private:
    double norm_;
};

/// A 4x4 matrix failed membership in the proper orthochronous Lorentz group.
class NotLorentz : public Error {
  public:
    NotLorentz(const std::string& classification, double group_residual, double determinant,
               double time_time)
        : Error("matrix is not proper orthochronous Lorentz: " + classification +
                " (group residual " + std::to_string(group_residual) + ")"),
          classification_(classification),
          group_residual_(group_residual),
          determinant_(determinant),
          time_time_(time_time) {}
    const std::string& classification() const { return classification_; }
    double group_residual() const { return group_residual_; }
    double determinant() const { return determinant_; }
    double time_time() const { return time_time_; }

  private:
    std::string classification_;
    double group_residual_;
    double determinant_;
    double time_time_;
};

/// Symmetric-only routine received a matrix with ||S - S^T|| beyond tolerance.
class NotSymmetric : public Error {
  public:
    explicit NotSymmetric(double asymmetry)
        : Error("matrix is not symmetric: ||S - S^T|| = " + std::to_string(asymmetry)),
          asymmetry_(asymmetry) {}
    double asymmetry() const { return asymmetry_; }

  private:
    double asymmetry_;
};

/// The matrix is singular (or close enough that the factorization is meaningless).
class SingularMatrix : public Error {
  public:
    explicit SingularMatrix(const std::string& reason) : Error("singular matrix: " + reason) {}
};

/// An input matrix or vector contains NaN or infinity.
class NonFiniteInput : public Error {
  public:
    NonFiniteInput() : Error("input contains non-finite entries") {}
};

/// An iteration failed to reach its convergence threshold.
class NoConvergence : public Error {
  public:
    NoConvergence(int iterations, double last_delta)
        : Error("iteration did not converge after " + std::to_string(iterations) +
                " steps (last delta " + std::to_string(last_delta) + ")"),
          iterations_(iterations),
          last_delta_(last_delta) {}
    int iterations() const { return iterations_; }
    double last_delta() const { return last_delta_; }

  private:
    int iterations_;
    double last_delta_;
};

/// L * L_v^{-1} deviated from the block-diagonal rotation form beyond tolerance.
class ShapeViolation : public Error {
  public:
    ShapeViolation(const std::string& offending_entries, double worst, double tolerance)
        : Error("residual rotation factor is not block diagonal: " + offending_entries +
                " (worst " + std::to_string(worst) + ", tolerance " + std::to_string(tolerance) +
                ")"),
          worst_(worst),
          tolerance_(tolerance) {}
    double worst() const { return worst_; }
    double tolerance() const { return tolerance_; }

  private:
    double worst_;
    double tolerance_;
};

/// A quantity that group membership guarantees was violated anyway; the input
/// that slipped through validation is corrupt.
class InternalInvariantViolation : public Error {
  public:
    explicit InternalInvariantViolation(const std::string& message)
        : Error("internal invariant violation: " + message) {}
};

/// The positive-definiteness identity is undefined at v = 0.
class ZeroVelocity : public Error {
  public:
    ZeroVelocity() : Error("identity right-hand side is undefined for v = 0") {}
};

/// Matrix or factor input that could not be parsed.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& message) : Error("parse error: " + message) {}
};

}  // namespace lorentz
