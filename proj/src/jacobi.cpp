#include "qint/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace qint {

Eigen::Matrix4d lmat(const Quat& q) {
    Eigen::Matrix4d m;
    m << q.w, -q.x, -q.y, -q.z,
         q.x,  q.w, -q.z,  q.y,
         q.y,  q.z,  q.w, -q.x,
         q.z, -q.y,  q.x,  q.w;
    return m;
}

Eigen::Matrix4d rmat(const Quat& q) {
    Eigen::Matrix4d m;
    m << q.w, -q.x, -q.y, -q.z,
         q.x,  q.w,  q.z, -q.y,
         q.y, -q.z,  q.w,  q.x,
         q.z,  q.y, -q.x,  q.w;
    return m;
}

namespace {

Eigen::VectorXd flatten(const HVec& z) {
    Eigen::VectorXd v(4 * z.size());
    for (std::size_t l = 0; l < z.size(); ++l) {
        v(4 * l) = z[l].w;
        v(4 * l + 1) = z[l].x;
        v(4 * l + 2) = z[l].y;
        v(4 * l + 3) = z[l].z;
    }
    return v;
}

HVec unflatten(const Eigen::VectorXd& v) {
    HVec z(v.size() / 4);
    for (std::size_t l = 0; l < z.size(); ++l) {
        z[l] = Quat{v(4 * l), v(4 * l + 1), v(4 * l + 2), v(4 * l + 3)};
    }
    return z;
}

}  // namespace

Eigen::MatrixXd realmat_fd(const HMapFn& f, const HVec& z, double h) {
    const std::size_t n = z.size();
    const std::size_t m = f(z).size();
    Eigen::MatrixXd J(4 * m, 4 * n);
    for (std::size_t col = 0; col < 4 * n; ++col) {
        HVec zp = z, zm = z;
        zp[col / 4][static_cast<int>(col % 4)] += h;
        zm[col / 4][static_cast<int>(col % 4)] -= h;
        const Eigen::VectorXd d = (flatten(f(zp)) - flatten(f(zm))) / (2.0 * h);
        J.col(col) = d;
    }
    return J;
}

int matrix_rank(const Eigen::MatrixXd& J, double rel_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 0;
    const double thresh = rel_tol * s(0);
    if (s(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > thresh) ++r;
    }
    return r;
}

LocalInverse::LocalInverse(HMapFn f, HVec z0, int k_max, double fd_step)
    : f_(std::move(f)), z0_(std::move(z0)), k_max_(k_max) {
    const Eigen::MatrixXd A = realmat_fd(f_, z0_, fd_step);
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("local inverse: map must have equal source and target dimension");
    }
    if (matrix_rank(A) < A.cols()) {
        throw std::invalid_argument("local inverse: Jacobi matrix is rank deficient at z0");
    }
    f0_ = f_(z0_);
    lu_.compute(A);
}

HVec LocalInverse::operator()(const HVec& y) const {
    const Eigen::VectorXd yf = flatten(y);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(yf.size());
    const double scale = std::max(1.0, (yf - flatten(f0_)).norm());
    for (int k = 0; k < k_max_; ++k) {
        HVec zx = unflatten(flatten(z0_) + x);
        const Eigen::VectorXd resid = yf - flatten(f_(zx));
        x += lu_.solve(resid);
        if (x.norm() > 1e6 * scale) {
            throw std::runtime_error("local inverse: iteration diverged");
        }
    }
    return unflatten(flatten(z0_) + x);
}

double LocalInverse::certificate(double r_test, int n_samples, std::uint64_t seed) const {
    Rng rng(seed);
    const Eigen::VectorXd f0 = flatten(f0_);
    double worst = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        Eigen::VectorXd dir(f0.size());
        for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = rng.normal();
        dir.normalize();
        const Eigen::VectorXd y = f0 + rng.uniform(0.0, r_test) * dir;
        const HVec x = (*this)(unflatten(y));
        worst = std::max(worst, (flatten(f_(x)) - y).norm());
    }
    return worst;
}

}  // namespace qint
