#pragma once

#include <cmath>

#include "sphfsi/vec.hpp"

namespace sphfsi {

/// Unit quaternion (w, x, y, z) representing a spatial rotation.
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quaternion normalized() const {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

/// Rotation by the exponential map of an orientation increment phi (axis*angle).
/// Series expansion below 1e-8 keeps sin(t/2)/t well conditioned.
inline Quaternion quat_exp(const Vec<3>& phi) {
    const double angle = norm(phi);
    double half_sinc;  // sin(angle/2)/angle
    double cos_half;
    if (angle < 1e-8) {
        const double a2 = angle * angle;
        half_sinc = 0.5 - a2 / 48.0;
        cos_half = 1.0 - a2 / 8.0;
    } else {
        half_sinc = std::sin(0.5 * angle) / angle;
        cos_half = std::cos(0.5 * angle);
    }
    return {cos_half, half_sinc * phi[0], half_sinc * phi[1], half_sinc * phi[2]};
}

/// 2D increments rotate about the z-axis.
inline Quaternion quat_exp_z(double phi) { return quat_exp(Vec<3>{0.0, 0.0, phi}); }

inline Vec<3> rotate(const Quaternion& q, const Vec<3>& p) {
    const Vec<3> u{q.x, q.y, q.z};
    const Vec<3> t = 2.0 * cross(u, p);
    return p + q.w * t + cross(u, t);
}

/// In-plane rotation for 2D vectors; q is assumed to be a rotation about z.
inline Vec<2> rotate(const Quaternion& q, const Vec<2>& p) {
    const Vec<3> r = rotate(q, Vec<3>{p[0], p[1], 0.0});
    return {r[0], r[1]};
}

template <int D>
inline Quaternion orientation_step(const Quaternion& q, const AngVec<D>& omega_mid, double dt) {
    Quaternion trans;
    if constexpr (D == 3) {
        trans = quat_exp(dt * omega_mid);
    } else {
        trans = quat_exp_z(dt * omega_mid);
    }
    return (trans * q).normalized();
}

}  // namespace sphfsi
