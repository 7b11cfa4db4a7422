#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qint/numeric.hpp"
#include "qint/quaternion.hpp"

namespace qint {

using HVec = std::vector<Quat>;
using HMapFn = std::function<HVec(const HVec&)>;

// Real 4x4 matrices of left and right multiplication by q.
Eigen::Matrix4d lmat(const Quat& q);
Eigen::Matrix4d rmat(const Quat& q);

// Real Jacobi matrix (4m x 4n) of a map H^n -> H^m by central differences.
// The default step 1e-4 balances roundoff against truncation for O(1)
// coefficients; linear and quadratic maps come out exact to ~1e-12.
Eigen::MatrixXd realmat_fd(const HMapFn& f, const HVec& z, double h = 1e-4);

// Numerical rank with threshold rel_tol * sigma_max.
int matrix_rank(const Eigen::MatrixXd& J, double rel_tol = 1e-8);

// Local inverse of f near z0 by the preconditioned fixed-point iteration
//   x <- x + A^-1 (y - f(z0 + x)),  A = J_f(z0),
// run for k_max steps. Throws when A is rank deficient (no local inverse) or
// when the iteration diverges.
class LocalInverse {
  public:
    LocalInverse(HMapFn f, HVec z0, int k_max = 30, double fd_step = 1e-4);

    // solves f(x) = y; y near f(z0)
    HVec operator()(const HVec& y) const;

    // sup over n_samples random targets y with |y - f(z0)| <= r_test of the
    // defect |f(inverse(y)) - y|
    double certificate(double r_test, int n_samples, std::uint64_t seed) const;

  private:
    HMapFn f_;
    HVec z0_;
    HVec f0_;
    int k_max_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace qint
