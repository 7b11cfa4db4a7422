#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qint/quaternion.hpp"

namespace qint {

using QuatFn = std::function<Quat(const Quat&)>;
using QuatFn2 = std::function<Quat(const std::array<Quat, 2>&)>;

// Conjugate-differential coefficients of a function H -> H:
//   dbar f = gamma dzeta~_t + delta dzeta~_u
// with gamma = (d1 f + (d2 f) i)/2 and delta = (-(d3 f) j + (d4 f) k)/2,
// central finite differences of step h.
struct DbarParts {
    Quat gamma;
    Quat delta;
};
DbarParts dbar_apply(const QuatFn& f, const Quat& z, double h = 1e-4);

// The four scalar obstructions to channel holomorphy, as complex numbers:
//   (gamma_11, -delta_12, delta_11, gamma_12)
// = (df11/dt~, df11/du, df12/du~, df12/dt). All four vanish exactly on the
// holomorphic class.
std::array<cplx, 4> cr_components(const DbarParts& p);
double cr_residual(const QuatFn& f, const Quat& z, double h = 1e-4);

// Solution operator for Gamma u = f by per-channel slice Cauchy transforms:
//   u11(t; x3, x4) = (1/pi) iint f11(s; x3, x4) (t - s)^-1 dA(s)
//   u12(t; x3, x4) = (1/pi) iint f12(s; x3, x4) (conj t - conj s)^-1 dA(s)
// where Gamma u = (d1 u + (d2 u) i)/2 has channels (du11/dt~, du12/dt).
// The datum must vanish outside the ball of radius support_radius (the
// transform integrates over the slice disk that covers the support). Polar
// quadrature centered at t cancels the singularity; nr radial Gauss-Legendre
// nodes, nphi angular trapezoid nodes.
class SliceSolver {
  public:
    SliceSolver(QuatFn f, double support_radius, int nr = 48, int nphi = 64);

    Quat operator()(const Quat& z) const;

  private:
    QuatFn f_;
    double rsup_;
    int nphi_;
    std::vector<double> xr_, wr_;
    std::vector<cplx> eph_;
};

// Gamma operator on H^2 in coordinate l (0 or 1), central differences:
//   Gamma_l u = (d_{l,1} u + (d_{l,2} u) i)/2.
Quat gamma_l(const QuatFn2& f, const std::array<Quat, 2>& z, int l, double h = 1e-4);

// Compatibility residual max_p |Gamma_2 f1 - Gamma_1 f2| over sample points.
// Vanishes when (f1, f2) = (Gamma_1 g, Gamma_2 g) for a smooth potential g.
double compat_residual(const QuatFn2& f1, const QuatFn2& f2,
                       const std::vector<std::array<Quat, 2>>& pts, double h = 1e-4);

}  // namespace qint
