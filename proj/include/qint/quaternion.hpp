#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

namespace qint {

// Quaternion q = w e + x i + y j + z k over the reals.
//
// The complex matrix model used throughout is
//   q ~ [[t, u], [-conj(u), conj(t)]],  t = w + x*1i,  u = y + z*1i,
// and t, u are called the channels of q.
struct Quat {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    constexpr Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quat operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    constexpr Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    friend constexpr Quat operator*(double s, const Quat& q) { return q * s; }
    constexpr Quat operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    Quat& operator+=(const Quat& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
    Quat& operator-=(const Quat& o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }

    constexpr double operator[](int m) const { return m == 0 ? w : (m == 1 ? x : (m == 2 ? y : z)); }
    double& operator[](int m) { return m == 0 ? w : (m == 1 ? x : (m == 2 ? y : z)); }

    constexpr Quat conj() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    constexpr Quat inv() const {
        const double n2 = norm2();
        return {w / n2, -x / n2, -y / n2, -z / n2};
    }
    double max_abs() const {
        return std::max(std::max(std::fabs(w), std::fabs(x)), std::max(std::fabs(y), std::fabs(z)));
    }
};

inline constexpr Quat QE{1.0, 0.0, 0.0, 0.0};
inline constexpr Quat QI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quat QJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quat QK{0.0, 0.0, 0.0, 1.0};

using cplx = std::complex<double>;

inline cplx tchan(const Quat& q) { return {q.w, q.x}; }
inline cplx uchan(const Quat& q) { return {q.y, q.z}; }
inline Quat from_channels(cplx t, cplx u) { return {t.real(), t.imag(), u.real(), u.imag()}; }

// span(e, i) embedding of a complex number
inline Quat embed(cplx c) { return {c.real(), c.imag(), 0.0, 0.0}; }

inline Quat qexp(const Quat& q) {
    const double nv = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    const double ew = std::exp(q.w);
    double s;  // sin(nv)/nv with the removable singularity filled in
    if (nv < 1e-12) {
        s = 1.0 - nv * nv / 6.0;
    } else {
        s = std::sin(nv) / nv;
    }
    return {ew * std::cos(nv), ew * s * q.x, ew * s * q.y, ew * s * q.z};
}

// Principal branch: angle in [0, pi]; axis defaults to i when the imaginary
// part vanishes (so log of a negative real is well defined).
inline Quat qlog(const Quat& q) {
    const double n = q.norm();
    const double nv = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    const double phi = std::atan2(nv, q.w);
    Quat out{std::log(n), 0.0, 0.0, 0.0};
    if (nv > 1e-14 * n) {
        out.x = phi * q.x / nv;
        out.y = phi * q.y / nv;
        out.z = phi * q.z / nv;
    } else {
        out.x = phi;  // axis i convention
    }
    return out;
}

// Complex coordinate of q in the slice span(e, M), M a pure unit quaternion.
inline cplx slice_coord(const Quat& q, const Quat& M) {
    return {q.w, q.x * M.x + q.y * M.y + q.z * M.z};
}

inline Quat from_slice(cplx c, const Quat& M) {
    return {c.real(), c.imag() * M.x, c.imag() * M.y, c.imag() * M.z};
}

inline std::ostream& operator<<(std::ostream& os, const Quat& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace qint
