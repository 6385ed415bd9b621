// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "lorentz/core.hpp"
#include "lorentz/matrix.hpp"

namespace lorentz {

/// Seeded generator of proper orthochronous Lorentz matrices, built by
/// alternating Haar-ish random rotations (normalized random quaternions) and
/// boosts with direction uniform on the sphere and speed uniform in
/// [0, max_speed]. Same seed, same sequence.
class LorentzSampler {
  public:
    explicit LorentzSampler(std::uint64_t seed) : rng_(seed) {}

    RotationMatrix rotation() {
        std::normal_distribution<double> gauss(0.0, 1.0);
        while (true) {
            const double w = gauss(rng_);
            const double x = gauss(rng_);
            const double y = gauss(rng_);
            const double z = gauss(rng_);
            if (w * w + x * x + y * y + z * z > 1e-12)
                return RotationMatrix::from_quaternion(w, x, y, z);
        }
    }

    Vec3 unit_direction() {
        std::normal_distribution<double> gauss(0.0, 1.0);
        while (true) {
            const Vec3 d{gauss(rng_), gauss(rng_), gauss(rng_)};
            const double n = norm(d);
            if (n > 1e-6) return d * (1.0 / n);
        }
    }

    BoostParameters boost(double max_speed = 0.9) {
        std::uniform_real_distribution<double> speed(0.0, max_speed);
        return BoostParameters(unit_direction() * speed(rng_));
    }

    /// Composition of 1..max_factors factors, alternating rotations and
    /// boosts; whether a rotation or a boost comes first is random too.
    LorentzMatrix lorentz(int max_factors = 8, double max_speed = 0.9) {
        std::uniform_int_distribution<int> count(1, max_factors);
        std::uniform_int_distribution<int> coin(0, 1);
        const int factors = count(rng_);
        bool rotate = coin(rng_) == 1;
        LorentzMatrix L = LorentzMatrix::identity();
        for (int i = 0; i < factors; ++i) {
            L = L * (rotate ? rotation_embedding(rotation()) : boost_matrix(boost(max_speed)));
            rotate = !rotate;
        }
        return L;
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

}  // namespace lorentz
