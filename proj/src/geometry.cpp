#include "qint/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qint {

Eigen::Vector4d gradient_fd(const ScalarFn& rho, const Quat& z, double h) {
    Eigen::Vector4d g;
    for (int m = 0; m < 4; ++m) {
        Quat zp = z, zm = z;
        zp[m] += h;
        zm[m] -= h;
        g(m) = (rho(zp) - rho(zm)) / (2.0 * h);
    }
    return g;
}

Eigen::Matrix4d hessian_fd(const ScalarFn& rho, const Quat& z, double h) {
    Eigen::Matrix4d H;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            Quat zpp = z, zpm = z, zmp = z, zmm = z;
            zpp[a] += h; zpp[b] += h;
            zpm[a] += h; zpm[b] -= h;
            zmp[a] -= h; zmp[b] += h;
            zmm[a] -= h; zmm[b] -= h;
            H(a, b) = (rho(zpp) - rho(zpm) - rho(zmp) + rho(zmm)) / (4.0 * h * h);
        }
    }
    return H;
}

Quat grad_field(const ScalarFn& rho, const Quat& z, double h) {
    const Eigen::Vector4d g = gradient_fd(rho, z, h);
    return {g(0), g(1), g(2), g(3)};
}

double strict_convexity_eps0(const ScalarFn& rho, const std::vector<Quat>& samples, double h) {
    double eps0 = std::numeric_limits<double>::infinity();
    for (const auto& z : samples) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(hessian_fd(rho, z, h));
        eps0 = std::min(eps0, es.eigenvalues().minCoeff());
    }
    return eps0;
}

double psh_laplacian(const ScalarFn& rho, const Quat& v, const Quat& w, double h) {
    auto line = [&](const Quat& s) { return rho(v + s * w); };
    const double f0 = line(Quat{});
    double acc = 0.0;
    for (int m = 0; m < 4; ++m) {
        Quat sp{}, sm{};
        sp[m] = h;
        sm[m] = -h;
        acc += (line(sp) - 2.0 * f0 + line(sm)) / (h * h);
    }
    return acc;
}

double margin(const ScalarFn& rho, const Quat& zeta, const Quat& z, double eps0, double h) {
    const Quat v = grad_field(rho, zeta, h);
    const Quat q = zeta - z;
    const double re = (v.conj() * q).w;
    return re - (rho(zeta) - rho(z) + eps0 * q.norm2() / 4.0);
}

Quat HullCertificate::eval(const std::vector<Quat>& z) const {
    if (z.size() != direction.size()) {
        throw std::invalid_argument("certificate eval: dimension mismatch");
    }
    cplx t(0.0, 0.0);
    for (std::size_t l = 0; l < z.size(); ++l) {
        t += tchan(direction[l].conj() * z[l]);
    }
    return qexp(embed(c * (t - shift)));
}

Eigen::VectorXd closest_point_convex(const std::vector<Eigen::VectorXd>& K,
                                     const Eigen::VectorXd& w, int max_iter) {
    if (K.empty()) throw std::invalid_argument("closest_point_convex: empty set");
    Eigen::VectorXd p = K.front();
    for (int it = 0; it < max_iter; ++it) {
        const Eigen::VectorXd grad = p - w;
        std::size_t best = 0;
        double bestv = K[0].dot(grad);
        for (std::size_t k = 1; k < K.size(); ++k) {
            const double v = K[k].dot(grad);
            if (v < bestv) {
                bestv = v;
                best = k;
            }
        }
        const Eigen::VectorXd d = K[best] - p;
        const double g = -grad.dot(d);  // Frank-Wolfe dual gap
        if (g <= 1e-14) break;
        const double den = d.squaredNorm();
        const double gam = den > 0.0 ? std::min(1.0, std::max(0.0, g / den)) : 0.0;
        p += gam * d;
    }
    return p;
}

namespace {

Eigen::VectorXd flatten(const std::vector<Quat>& z) {
    Eigen::VectorXd v(4 * z.size());
    for (std::size_t l = 0; l < z.size(); ++l) {
        v(4 * l) = z[l].w;
        v(4 * l + 1) = z[l].x;
        v(4 * l + 2) = z[l].y;
        v(4 * l + 3) = z[l].z;
    }
    return v;
}

}  // namespace

std::optional<HullCertificate> hull_separate(const std::vector<std::vector<Quat>>& K,
                                             const std::vector<Quat>& query, double tol) {
    if (K.empty()) throw std::invalid_argument("hull_separate: empty set");
    const std::size_t n = query.size();
    std::vector<Eigen::VectorXd> Kf;
    Kf.reserve(K.size());
    for (const auto& k : K) {
        if (k.size() != n) throw std::invalid_argument("hull_separate: dimension mismatch");
        Kf.push_back(flatten(k));
    }
    const Eigen::VectorXd wf = flatten(query);
    const Eigen::VectorXd p = closest_point_convex(Kf, wf);
    const double dist = (wf - p).norm();
    if (dist <= tol) return std::nullopt;

    const Eigen::VectorXd d = (wf - p) / dist;
    double support = -std::numeric_limits<double>::infinity();
    for (const auto& k : Kf) support = std::max(support, d.dot(k));
    const double gap = d.dot(wf) - support;
    if (gap <= 0.0) return std::nullopt;  // separation not established at this accuracy

    HullCertificate cert;
    cert.direction.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        cert.direction[l] = Quat{d(4 * l), d(4 * l + 1), d(4 * l + 2), d(4 * l + 3)};
    }
    cert.shift = d.dot(wf);
    cert.gap = gap;
    cert.c = 1.0 / gap;
    return cert;
}

}  // namespace qint
