#include "qint/dbar.hpp"

#include <cmath>

#include "qint/numeric.hpp"

namespace qint {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Quat partial(const QuatFn& f, const Quat& z, int m, double h) {
    Quat zp = z, zm = z;
    zp[m] += h;
    zm[m] -= h;
    return (f(zp) - f(zm)) / (2.0 * h);
}

}  // namespace

DbarParts dbar_apply(const QuatFn& f, const Quat& z, double h) {
    const Quat d1 = partial(f, z, 0, h);
    const Quat d2 = partial(f, z, 1, h);
    const Quat d3 = partial(f, z, 2, h);
    const Quat d4 = partial(f, z, 3, h);
    DbarParts p;
    p.gamma = (d1 + d2 * QI) * 0.5;
    p.delta = (d4 * QK - d3 * QJ) * 0.5;
    return p;
}

std::array<cplx, 4> cr_components(const DbarParts& p) {
    return {tchan(p.gamma), -uchan(p.delta), tchan(p.delta), uchan(p.gamma)};
}

double cr_residual(const QuatFn& f, const Quat& z, double h) {
    const auto c = cr_components(dbar_apply(f, z, h));
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
}

SliceSolver::SliceSolver(QuatFn f, double support_radius, int nr, int nphi)
    : f_(std::move(f)), rsup_(support_radius), nphi_(nphi) {
    gauss_legendre(nr, xr_, wr_);
    eph_.resize(nphi);
    for (int k = 0; k < nphi; ++k) {
        const double a = 2.0 * kPi * k / nphi;
        eph_[k] = cplx(std::cos(a), std::sin(a));
    }
}

Quat SliceSolver::operator()(const Quat& z) const {
    const cplx t = tchan(z);
    const double x3 = z.y, x4 = z.z;
    // the datum's slice support: |s|^2 <= rsup^2 - x3^2 - x4^2
    const double rad2 = rsup_ * rsup_ - x3 * x3 - x4 * x4;
    if (rad2 <= 0.0) return Quat{};
    const double rmax = std::abs(t) + std::sqrt(rad2) + 1e-12;

    // 1/(t - s) = -exp(-i phi)/r against dA = r dr dphi
    NeumaierSum u11re, u11im, u12re, u12im;
    for (std::size_t a = 0; a < xr_.size(); ++a) {
        const double r = (0.5 * xr_[a] + 0.5) * rmax;
        const double w = 0.5 * wr_[a] * rmax;
        for (int k = 0; k < nphi_; ++k) {
            const cplx s = t + r * eph_[k];
            const Quat fv = f_(from_channels(s, cplx(x3, x4)));
            const cplx k11 = -std::conj(eph_[k]) * tchan(fv);
            const cplx k12 = -eph_[k] * uchan(fv);  // conjugated kernel for the second slot
            u11re.add(k11.real() * w);
            u11im.add(k11.imag() * w);
            u12re.add(k12.real() * w);
            u12im.add(k12.imag() * w);
        }
    }
    const double scale = (2.0 * kPi / nphi_) / kPi;
    return from_channels(cplx(u11re.value(), u11im.value()) * scale,
                         cplx(u12re.value(), u12im.value()) * scale);
}

Quat gamma_l(const QuatFn2& f, const std::array<Quat, 2>& z, int l, double h) {
    auto shift = [&](int m, double d) {
        std::array<Quat, 2> s = z;
        s[l][m] += d;
        return s;
    };
    const Quat d1 = (f(shift(0, h)) - f(shift(0, -h))) / (2.0 * h);
    const Quat d2 = (f(shift(1, h)) - f(shift(1, -h))) / (2.0 * h);
    return (d1 + d2 * QI) * 0.5;
}

double compat_residual(const QuatFn2& f1, const QuatFn2& f2,
                       const std::vector<std::array<Quat, 2>>& pts, double h) {
    double worst = 0.0;
    for (const auto& z : pts) {
        auto g1 = [&](const std::array<Quat, 2>& p) { return f1(p); };
        auto g2 = [&](const std::array<Quat, 2>& p) { return f2(p); };
        const Quat lhs = gamma_l(g1, z, 1, h);
        const Quat rhs = gamma_l(g2, z, 0, h);
        worst = std::max(worst, (lhs - rhs).max_abs());
    }
    return worst;
}

}  // namespace qint
