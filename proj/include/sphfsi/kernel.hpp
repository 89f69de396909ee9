#pragma once

#include <cassert>
#include <cmath>
#include <numbers>

#include "sphfsi/vec.hpp"

namespace sphfsi {

/// Quintic spline smoothing kernel with support radius 3h.
///
/// Normalization constants were fixed once against the quadrature oracle in
/// the kernel test suite: 1/120 (1D), 7/(478 pi) (2D), 1/(120 pi) (3D).
template <int D>
class QuinticKernel {
public:
    static constexpr double kSupportScale = 3.0;

    explicit QuinticKernel(double h) : h_(h), inv_h_(1.0 / h), sigma_(sigma(h)) {
        assert(h > 0.0);
    }

    double smoothing_length() const { return h_; }
    double support_radius() const { return kSupportScale * h_; }

    /// Kernel value W(r, h); zero for r > 3h, non-negative inside.
    double w(double r) const {
        assert(r >= 0.0);
        return sigma_ * shape(r * inv_h_);
    }

    /// Radial derivative dW/dr; <= 0 everywhere and 0 at r = 0 and r >= 3h.
    double dw_dr(double r) const {
        assert(r >= 0.0);
        return sigma_ * inv_h_ * shape_deriv(r * inv_h_);
    }

    double w0() const { return sigma_ * 66.0; }

    static double sigma(double h) {
        if constexpr (D == 1) return 1.0 / (120.0 * h);
        if constexpr (D == 2) return 7.0 / (478.0 * std::numbers::pi * h * h);
        return 1.0 / (120.0 * std::numbers::pi * h * h * h);
    }

    static double shape(double q) {
        if (q >= 3.0) return 0.0;
        const double a = 3.0 - q;
        double f = a * a * a * a * a;
        if (q < 2.0) {
            const double b = 2.0 - q;
            f -= 6.0 * b * b * b * b * b;
        }
        if (q < 1.0) {
            const double c = 1.0 - q;
            f += 15.0 * c * c * c * c * c;
        }
        return f;
    }

    static double shape_deriv(double q) {
        if (q >= 3.0) return 0.0;
        const double a = 3.0 - q;
        double f = -5.0 * a * a * a * a;
        if (q < 2.0) {
            const double b = 2.0 - q;
            f += 30.0 * b * b * b * b;
        }
        if (q < 1.0) {
            const double c = 1.0 - q;
            f -= 75.0 * c * c * c * c;
        }
        return f;
    }

private:
    double h_;
    double inv_h_;
    double sigma_;
};

}  // namespace sphfsi
