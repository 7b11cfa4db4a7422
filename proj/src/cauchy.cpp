#include "qint/cauchy.hpp"

#include <cmath>
#include <stdexcept>

#include "qint/numeric.hpp"

namespace qint {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

Quat line_cauchy(const QuatFn& f, const Quat& center, double radius, const Quat& M, int winding,
                 const Quat& z, int n) {
    if (winding == 0) throw std::invalid_argument("line_cauchy: winding must be nonzero");
    Quat acc{};
    for (int k = 0; k < n; ++k) {
        const double ang = kTwoPi * winding * k / n;
        const cplx e(std::cos(ang), std::sin(ang));
        const Quat zeta = center + radius * from_slice(e, M);
        const Quat diff = zeta - z;
        if (diff.norm2() < 1e-24) throw std::invalid_argument("line_cauchy: loop hits z");
        const Quat dzeta = radius * from_slice(cplx(0.0, kTwoPi * winding) * e, M);
        acc += f(zeta) * (diff.inv() * dzeta);
    }
    return (acc / static_cast<double>(n)) * M.conj() / (kTwoPi * winding);
}

ArgContinuation delta_arg(const std::vector<Quat>& path) {
    if (path.size() < 2) throw std::invalid_argument("delta_arg: need a sampled loop");
    const Quat L0 = qlog(path.front());
    Quat prev = L0;
    for (std::size_t k = 1; k < path.size(); ++k) {
        const Quat& q = path[k];
        const Quat base = qlog(q);
        const double nv = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
        Quat Mq{0.0, 1.0, 0.0, 0.0};
        if (nv > 1e-13 * q.norm()) Mq = Quat{0.0, q.x / nv, q.y / nv, q.z / nv};
        const double phi = std::atan2(nv, q.w);

        Quat best = base;
        double bestd = (base - prev).norm2();
        for (int m = -2; m <= 2; ++m) {
            Quat cand = base;
            cand.x += kTwoPi * m * Mq.x;
            cand.y += kTwoPi * m * Mq.y;
            cand.z += kTwoPi * m * Mq.z;
            double d = (cand - prev).norm2();
            if (d < bestd) {
                bestd = d;
                best = cand;
            }
            // reflected branch: same point, axis -Mq with angle -phi + 2 pi m
            cand = Quat{base.w, 0.0, 0.0, 0.0};
            const double ang = -phi + kTwoPi * m;
            cand.x = ang * -Mq.x;
            cand.y = ang * -Mq.y;
            cand.z = ang * -Mq.z;
            d = (cand - prev).norm2();
            if (d < bestd) {
                bestd = d;
                best = cand;
            }
        }
        prev = best;
    }
    ArgContinuation out;
    out.increment = prev - L0;
    const double mag =
        std::sqrt(out.increment.x * out.increment.x + out.increment.y * out.increment.y +
                  out.increment.z * out.increment.z);
    if (mag < 1e-8) {
        out.axis = QI;
        out.winding = 0.0;
    } else {
        out.axis = Quat{0.0, out.increment.x / mag, out.increment.y / mag, out.increment.z / mag};
        out.winding = mag / kTwoPi;
    }
    return out;
}

namespace {

void check_torus(const TorusSpec& t, const Quat& z) {
    const Quat d = t.center - z;
    const cplx c3 = slice_coord(d, t.axes[2]);
    if (std::fabs(d.norm() - std::abs(c3)) > 1e-12) {
        throw std::invalid_argument("torus_cg: z must lie in the M3 slice through the center");
    }
    if (std::abs(c3) >= t.radii[2]) {
        throw std::invalid_argument("torus_cg: z outside the outer loop disk");
    }
}

}  // namespace

Quat torus_cg_boundary(const QuatFn& f, const TorusSpec& torus, const Quat& z, int n) {
    check_torus(torus, z);
    const auto [r1, r2, r3] = torus.radii;
    const Quat &M1 = torus.axes[0], &M2 = torus.axes[1], &M3 = torus.axes[2];
    const cplx c3 = slice_coord(torus.center - z, M3);
    const Quat M3i = M3.inv();

    std::vector<cplx> exps(n);
    for (int k = 0; k < n; ++k) {
        const double ang = kTwoPi * k / n;
        exps[k] = cplx(std::cos(ang), std::sin(ang));
    }

    Quat acc{};
    for (int k3 = 0; k3 < n; ++k3) {
        const cplx w = c3 + r3 * exps[k3];
        const Quat L3p = from_slice(cplx(0.0, kTwoPi) * r3 * exps[k3] / w, M3);
        // the two inner log derivatives contribute (2 pi M1) M1^-1 (2 pi M2) M2^-1 = (2 pi)^2
        const Quat tail = L3p * M3i;
        const Quat z3 = torus.center + from_slice(r3 * exps[k3], M3);
        for (int k2 = 0; k2 < n; ++k2) {
            const Quat z2 = z3 + from_slice(r2 * exps[k2], M2);
            for (int k1 = 0; k1 < n; ++k1) {
                acc += f(z2 + from_slice(r1 * exps[k1], M1)) * tail;
            }
        }
    }
    const double nn = static_cast<double>(n);
    return acc * (kTwoPi * kTwoPi) / (kTwoPi * kTwoPi * kTwoPi) / (nn * nn * nn);
}

namespace {

// average of f over the two inner loops, at slice offset w from the center
Quat inner_average(const QuatFn& f, const TorusSpec& t, cplx w, int n) {
    const Quat base = t.center + from_slice(w, t.axes[2]);
    Quat acc{};
    for (int k2 = 0; k2 < n; ++k2) {
        const double a2 = kTwoPi * k2 / n;
        const Quat z2 = base + from_slice(t.radii[1] * cplx(std::cos(a2), std::sin(a2)), t.axes[1]);
        for (int k1 = 0; k1 < n; ++k1) {
            const double a1 = kTwoPi * k1 / n;
            acc += f(z2 + from_slice(t.radii[0] * cplx(std::cos(a1), std::sin(a1)), t.axes[0]));
        }
    }
    return acc / static_cast<double>(n * n);
}

// slice Wirtinger derivative (d_re + d_im M3)/2 of the averaged data
Quat slice_gamma(const QuatFn& f, const TorusSpec& t, cplx w, int n, double h = 1e-5) {
    const Quat dre = (inner_average(f, t, w + h, n) - inner_average(f, t, w - h, n)) / (2.0 * h);
    const Quat dim =
        (inner_average(f, t, w + cplx(0.0, h), n) - inner_average(f, t, w - cplx(0.0, h), n)) /
        (2.0 * h);
    return (dre + dim * t.axes[2]) * 0.5;
}

}  // namespace

Quat torus_cg_volume(const QuatFn& f, const TorusSpec& torus, const Quat& z, int n_avg, int nr,
                     int nphi) {
    check_torus(torus, z);
    const double r3 = torus.radii[2];
    const Quat& M3 = torus.axes[2];
    const cplx z_a = slice_coord(z - torus.center, M3);

    std::vector<double> xr, wr;
    gauss_legendre(nr, xr, wr);

    Quat acc{};
    for (int kphi = 0; kphi < nphi; ++kphi) {
        const double phi = kTwoPi * kphi / nphi;
        const cplx eph(std::cos(phi), std::sin(phi));
        // exit radius of the disk |w| < r3 along the ray from z_a
        const double b = (std::conj(z_a) * eph).real();
        const double R = -b + std::sqrt(r3 * r3 - std::norm(z_a) + b * b);
        for (int kr = 0; kr < nr; ++kr) {
            const double r = (0.5 * xr[kr] + 0.5) * R;
            const double wgt = 0.5 * wr[kr] * R;
            const cplx w = z_a + r * eph;
            const Quat g = slice_gamma(f, torus, w, n_avg);
            // (w - z_a)^-1 = exp(-i phi)/r cancels the polar area element r dr dphi
            acc += (g * from_slice(std::conj(eph), M3)) * wgt;
        }
    }
    return acc * (kTwoPi / nphi) / kPi;
}

}  // namespace qint
