#pragma once

#include <array>
#include <functional>

#include "qint/form.hpp"
#include "qint/integration.hpp"
#include "qint/quaternion.hpp"

namespace qint {

// Reproducing kernel theta_z, a 3-form in zeta with coefficients in
// span(e, i). With q = zeta - z, a = conj(t_q), b = u_q:
//
//   theta_z = -(2 pi^2)^-1 |q|^-4 ( a i dx134 - a dx234 - b i dx123 - b dx124 )
//
// Properties relied on downstream: period +e over spheres around z, closed
// away from z, d(|q|^4 theta) = 8 (2 pi)^-2 dvol, and annihilation of the
// holomorphic channel differentials (dzeta_t ^ theta = dzeta_u ^ theta = 0).
struct KernelCoeffs {
    // component order matches kTriples: dx123, dx124, dx134, dx234
    std::array<cplx, 4> c{};
};

KernelCoeffs theta_coeffs(const Quat& q);

// theta as a Form value (span(e,i) coefficients embedded as quaternions)
Form theta_form(const Quat& q);

// dvol coefficient of (sum_m g_m dx_m) ^ K for a 3-form K with the component
// layout above: sum_m sign(m) g_m * c_complement(m), signs (+,-,+,-).
Quat wedge1_with(const std::array<Quat, 4>& g, const KernelCoeffs& k);

// Boundary integral B_dU f = int_{S(center, radius)} f(zeta) theta_z, with f
// multiplying the kernel on the left.
Quat boundary_integral(const std::function<Quat(const Quat&)>& f, const SphereGrid& grid,
                       const Quat& center, double radius, const Quat& z);

// Volume integral int_U g ^ theta_z over the unit ball (center 0), where g is
// a 1-form given by its four quaternion coefficient functions. Radial rays
// from z with nr Gauss-Legendre nodes; grid supplies the angular part.
Quat volume_integral(const std::function<std::array<Quat, 4>(const Quat&)>& g,
                     const SphereGrid& grid, const Quat& z, int nr);

// Cauchy-Fantappie data of a section psi at a boundary point: channel scalars
// s1 = conj(t_psi), s2 = u_psi and their coordinate differentials.
struct Section {
    cplx s1, s2;
    std::array<cplx, 4> ds1{}, ds2{};
};

using SectionField = std::function<Section(const Quat& zeta)>;

// Section for psi = zeta - z (collapses the kernel to theta_z).
Section section_bm(const Quat& zeta, const Quat& z);
// Section for psi = v_rho = 2 zeta (outward field of rho = |z|^2 - 1).
Section section_ball(const Quat& zeta);

// Denominator D = s1 t_q + s2 conj(u_q), the t-channel of <psi; zeta - z>.
cplx section_denominator(const Section& s, const Quat& q);

// Kernel coefficients of phi^psi = -(4 pi^2)^-1 D^-2 (s1 ds2 - s2 ds1) ^ dt ^ duc.
KernelCoeffs phi_coeffs(const Section& s, cplx D);

// L^psi f over the unit sphere.
Quat leray_boundary(const std::function<Quat(const Quat&)>& f, const SectionField& psi,
                    const SphereGrid& grid, const Quat& z);

// Homotopy term R^psi(g) over the unit sphere for a 1-form g, interpolating
// between the psi section and the Bochner-Martinelli section with nl
// Gauss-Legendre nodes in lambda.
Quat leray_homotopy(const std::function<std::array<Quat, 4>(const Quat&)>& g,
                    const SectionField& psi, const SphereGrid& grid, const Quat& z, int nl);

}  // namespace qint
