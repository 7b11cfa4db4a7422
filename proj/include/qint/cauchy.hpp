#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qint/quaternion.hpp"

namespace qint {

using QuatFn = std::function<Quat(const Quat&)>;

// Winding-number line formula on a circular loop
//   zeta(s) = center + radius exp(2 pi M winding s),  s in [0, 1),
// with M a pure unit axis:
//   f(z) ~= (2 pi winding)^-1 (oint f(zeta) (zeta - z)^-1 dzeta) conj(M).
// Trapezoid quadrature with n nodes (spectral on these periodic integrands).
Quat line_cauchy(const QuatFn& f, const Quat& center, double radius, const Quat& M, int winding,
                 const Quat& z, int n = 256);

// Continued argument along a sampled loop (first sample repeated last).
// Tracks the quaternion logarithm branch nearest to the previous sample,
// including the reflected branch (angle phi -> 2 pi - phi flips the axis).
// Returns the net axis, the winding count |dL|/(2 pi) and the raw increment.
struct ArgContinuation {
    Quat axis;
    double winding = 0.0;
    Quat increment;
};
ArgContinuation delta_arg(const std::vector<Quat>& path);

// Triple-loop boundary term of the Cauchy-Green formula over the nested torus
//   zeta = a + r3 exp(2 pi M3 s3) + r2 exp(2 pi M2 s2) + r1 exp(2 pi M1 s1),
// radii positive, axes pure units. Successive loop differences stay in
// their own slices, so the log derivatives of the two inner loops are exactly
// 2 pi M1 and 2 pi M2 and the outer one is evaluated in the M3 slice.
//
// Preconditions: a - z must lie in span(e, M3) with |a - z| < r3. Reproduces
// channel-holomorphic data whose right factors commute with the M3 slice; for
// other data the boundary term alone is biased and the residual flags it
// (except at the torus center z = a, where the bias vanishes).
struct TorusSpec {
    Quat center;                  // a
    std::array<double, 3> radii;  // r1, r2, r3 (r3 belongs to the outer M3 loop)
    std::array<Quat, 3> axes;     // M1, M2, M3 pure units, independent over R
};

Quat torus_cg_boundary(const QuatFn& f, const TorusSpec& torus, const Quat& z, int n = 24);

// Volume correction of the Cauchy-Green formula in the slice reduction of the
// nested torus: the two inner loops average f, and the outer loop becomes a
// one-variable Cauchy-Green identity on the disk |w| < r3 in the M3 slice.
// The correction is (1/pi) iint gamma(w) (w - z_a)^-1 dA with gamma the slice
// Wirtinger derivative of the averaged data and z_a the slice coordinate of
// z - a. Subtracting it from the boundary term restores f(z) for smooth f.
Quat torus_cg_volume(const QuatFn& f, const TorusSpec& torus, const Quat& z, int n_avg = 24,
                     int nr = 24, int nphi = 48);

}  // namespace qint
