#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "qint/numeric.hpp"
#include "qint/quaternion.hpp"

namespace qint {

using ScalarFn = std::function<double(const Quat&)>;

// Central-difference gradient and Hessian of a defining function on H ~ R^4.
Eigen::Vector4d gradient_fd(const ScalarFn& rho, const Quat& z, double h = 1e-3);
Eigen::Matrix4d hessian_fd(const ScalarFn& rho, const Quat& z, double h = 1e-3);

// Gradient assembled as a quaternion (the field v_rho of the defining
// function; equals 2 zeta for rho = |z|^2 - 1).
Quat grad_field(const ScalarFn& rho, const Quat& z, double h = 1e-3);

// Smallest Hessian eigenvalue over the sample set. Positive value eps0
// certifies strict convexity with modulus eps0 on the sampled region.
double strict_convexity_eps0(const ScalarFn& rho, const std::vector<Quat>& samples,
                             double h = 1e-3);

// Subharmonicity test along the quaternion line v + zeta(s) w: the Laplacian
// in the four real line parameters at s = 0. Nonnegative for all (v, w) is
// the plurisubharmonicity condition; |z|^2 gives exactly 8 |w|^2.
double psh_laplacian(const ScalarFn& rho, const Quat& v, const Quat& w, double h = 1e-3);

// Support-type margin of a strictly convex defining function at a boundary
// point zeta against an interior point z:
//   Re<v_rho(zeta); zeta - z> - [rho(zeta) - rho(z) + eps0 |zeta - z|^2 / 4].
// For rho = |z|^2 - 1 with eps0 = 2 this equals |zeta - z|^2 / 2 exactly.
double margin(const ScalarFn& rho, const Quat& zeta, const Quat& z, double eps0, double h = 1e-3);

// Separating certificate for a point w outside the convex hull of a finite
// set K in H^n. The function
//   f(z) = exp( c (t-channel of sum_l conj(d_l) z_l - shift) )
// is channel holomorphic; shift and c are chosen from the measured support
// gap so that |f(w)| = 1 and sup_K |f| = e^-1 by construction.
struct HullCertificate {
    std::vector<Quat> direction;  // unit vector d, as n quaternions
    double shift = 0.0;
    double c = 0.0;
    double gap = 0.0;

    Quat eval(const std::vector<Quat>& z) const;
};

// Closest point of the convex hull of K (rows of points, dimension 4n each)
// by Frank-Wolfe with exact line search; stops at dual gap <= 1e-14.
Eigen::VectorXd closest_point_convex(const std::vector<Eigen::VectorXd>& K,
                                     const Eigen::VectorXd& w, int max_iter = 4000);

// Membership test for the function-theoretic hull: a query belongs to the
// hull unless a separating certificate exists. Returns the certificate for
// outside points, std::nullopt for members (distance <= tol).
std::optional<HullCertificate> hull_separate(const std::vector<std::vector<Quat>>& K,
                                             const std::vector<Quat>& query, double tol = 1e-7);

}  // namespace qint
