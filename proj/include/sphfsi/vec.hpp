#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace sphfsi {

/// Fixed-size cartesian vector, D in {1,2,3}.
template <int D>
struct Vec {
    static_assert(D >= 1 && D <= 3);
    std::array<double, D> v{};

    constexpr Vec() = default;
    constexpr explicit Vec(double x) requires(D == 1) : v{x} {}
    constexpr Vec(double x, double y) requires(D == 2) : v{x, y} {}
    constexpr Vec(double x, double y, double z) requires(D == 3) : v{x, y, z} {}

    static constexpr Vec zero() { return Vec{}; }
    static constexpr Vec filled(double s) {
        Vec r;
        for (int i = 0; i < D; ++i) r.v[i] = s;
        return r;
    }

    constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    constexpr Vec& operator+=(const Vec& o) {
        for (int i = 0; i < D; ++i) v[i] += o.v[i];
        return *this;
    }
    constexpr Vec& operator-=(const Vec& o) {
        for (int i = 0; i < D; ++i) v[i] -= o.v[i];
        return *this;
    }
    constexpr Vec& operator*=(double s) {
        for (int i = 0; i < D; ++i) v[i] *= s;
        return *this;
    }
    constexpr Vec& operator/=(double s) {
        for (int i = 0; i < D; ++i) v[i] /= s;
        return *this;
    }

    friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend constexpr Vec operator*(Vec a, double s) { return a *= s; }
    friend constexpr Vec operator*(double s, Vec a) { return a *= s; }
    friend constexpr Vec operator/(Vec a, double s) { return a /= s; }
    friend constexpr Vec operator-(const Vec& a) {
        Vec r;
        for (int i = 0; i < D; ++i) r.v[i] = -a.v[i];
        return r;
    }
    friend constexpr bool operator==(const Vec& a, const Vec& b) { return a.v == b.v; }

    friend std::ostream& operator<<(std::ostream& os, const Vec& a) {
        os << '(';
        for (int i = 0; i < D; ++i) os << a.v[i] << (i + 1 < D ? "," : ")");
        return os;
    }
};

template <int D>
constexpr double dot(const Vec<D>& a, const Vec<D>& b) {
    double s = 0.0;
    for (int i = 0; i < D; ++i) s += a[i] * b[i];
    return s;
}

template <int D>
inline double norm(const Vec<D>& a) {
    return std::sqrt(dot(a, a));
}

template <int D>
constexpr double norm_sq(const Vec<D>& a) {
    return dot(a, a);
}

inline constexpr Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Angular quantities are scalars in 2D (z-component) and vectors in 3D.
template <int D>
using AngVec = std::conditional_t<D == 3, Vec<3>, double>;

/// omega x r for the dimension-appropriate angular velocity type.
inline constexpr Vec<2> angular_cross(double w, const Vec<2>& r) {
    return {-w * r[1], w * r[0]};
}
inline constexpr Vec<3> angular_cross(const Vec<3>& w, const Vec<3>& r) {
    return cross(w, r);
}

/// r x f reduced to the angular type: scalar moment in 2D, full vector in 3D.
inline constexpr double moment(const Vec<2>& r, const Vec<2>& f) {
    return r[0] * f[1] - r[1] * f[0];
}
inline constexpr Vec<3> moment(const Vec<3>& r, const Vec<3>& f) {
    return cross(r, f);
}

inline constexpr double ang_zero(double) { return 0.0; }
inline constexpr Vec<3> ang_zero(const Vec<3>&) { return Vec<3>::zero(); }

inline double ang_norm(double w) { return std::abs(w); }
inline double ang_norm(const Vec<3>& w) { return norm(w); }

/// Axis-aligned box given by two corners.
template <int D>
struct Box {
    Vec<D> lo{};
    Vec<D> hi{};

    constexpr bool contains(const Vec<D>& p) const {
        for (int i = 0; i < D; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
    constexpr Vec<D> extent() const { return hi - lo; }
    constexpr Box expanded(double pad) const {
        Box b = *this;
        for (int i = 0; i < D; ++i) {
            b.lo[i] -= pad;
            b.hi[i] += pad;
        }
        return b;
    }
};

}  // namespace sphfsi
