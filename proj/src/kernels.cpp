#include "qint/kernels.hpp"

#include <cmath>

namespace qint {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// complement triple index and sign for dx_m ^ dx_complement = sign * dvol
constexpr int kCompIdx[4] = {3, 2, 1, 0};  // m=1 -> dx234, m=2 -> dx134, m=3 -> dx124, m=4 -> dx123
constexpr double kCompSign[4] = {+1.0, -1.0, +1.0, -1.0};

struct QuatSum {
    NeumaierSum c[4];
    void add(const Quat& q, double w) {
        c[0].add(q.w * w);
        c[1].add(q.x * w);
        c[2].add(q.y * w);
        c[3].add(q.z * w);
    }
    Quat value() const { return {c[0].value(), c[1].value(), c[2].value(), c[3].value()}; }
};

}  // namespace

KernelCoeffs theta_coeffs(const Quat& q) {
    const double n2 = q.norm2();
    const double pref = -1.0 / (2.0 * kPi * kPi) / (n2 * n2);
    const cplx a = std::conj(tchan(q));
    const cplx b = uchan(q);
    const cplx im(0.0, 1.0);
    KernelCoeffs k;
    k.c[0] = pref * (-im * b);  // dx123
    k.c[1] = pref * (-b);       // dx124
    k.c[2] = pref * (im * a);   // dx134
    k.c[3] = pref * (-a);       // dx234
    return k;
}

Form theta_form(const Quat& q) {
    const KernelCoeffs k = theta_coeffs(q);
    Form f;
    f.coeff(0b0111) = embed(k.c[0]);
    f.coeff(0b1011) = embed(k.c[1]);
    f.coeff(0b1101) = embed(k.c[2]);
    f.coeff(0b1110) = embed(k.c[3]);
    return f;
}

Quat wedge1_with(const std::array<Quat, 4>& g, const KernelCoeffs& k) {
    Quat acc{};
    for (int m = 0; m < 4; ++m) {
        acc += (g[m] * embed(k.c[kCompIdx[m]])) * kCompSign[m];
    }
    return acc;
}

Quat boundary_integral(const std::function<Quat(const Quat&)>& f, const SphereGrid& grid,
                       const Quat& center, double radius, const Quat& z) {
    const double r3 = radius * radius * radius;
    QuatSum acc;
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const Quat zeta = center + radius * grid.omega[n];
        const KernelCoeffs k = theta_coeffs(zeta - z);
        const Quat fv = f(zeta);
        for (int tI = 0; tI < 4; ++tI) {
            acc.add(fv * embed(k.c[tI]), grid.weight[n] * grid.minors[n][tI] * r3);
        }
    }
    return acc.value();
}

Quat volume_integral(const std::function<std::array<Quat, 4>(const Quat&)>& g,
                     const SphereGrid& grid, const Quat& z, int nr) {
    std::vector<double> xr, wr;
    gauss_legendre(nr, xr, wr);
    QuatSum acc;
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const double R = ball_exit_radius(z, grid.omega[n]);
        const double wang = grid.weight[n] * grid.area[n];
        for (int a = 0; a < nr; ++a) {
            const double r = (0.5 * xr[a] + 0.5) * R;
            const double w = 0.5 * wr[a] * R;
            const Quat zeta = z + r * grid.omega[n];
            const KernelCoeffs k = theta_coeffs(zeta - z);
            acc.add(wedge1_with(g(zeta), k), wang * w * r * r * r);
        }
    }
    return acc.value();
}

Section section_bm(const Quat& zeta, const Quat& z) {
    const Quat q = zeta - z;
    Section s;
    s.s1 = std::conj(tchan(q));
    s.s2 = uchan(q);
    s.ds1 = {cplx(1.0, 0.0), cplx(0.0, -1.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
    s.ds2 = {cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 1.0)};
    return s;
}

Section section_ball(const Quat& zeta) {
    Section s;
    s.s1 = 2.0 * std::conj(tchan(zeta));
    s.s2 = 2.0 * uchan(zeta);
    s.ds1 = {cplx(2.0, 0.0), cplx(0.0, -2.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
    s.ds2 = {cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(2.0, 0.0), cplx(0.0, 2.0)};
    return s;
}

cplx section_denominator(const Section& s, const Quat& q) {
    return s.s1 * tchan(q) + s.s2 * std::conj(uchan(q));
}

KernelCoeffs phi_coeffs(const Section& s, cplx D) {
    const cplx pref = -1.0 / (4.0 * kPi * kPi) / (D * D);
    const cplx im(0.0, 1.0);
    std::array<cplx, 4> h;
    for (int m = 0; m < 4; ++m) h[m] = s.s1 * s.ds2[m] - s.s2 * s.ds1[m];
    KernelCoeffs k;
    k.c[0] = pref * (im * h[0] - h[1]);   // dx123
    k.c[1] = pref * (h[0] + im * h[1]);   // dx124
    k.c[2] = pref * (im * h[2] + h[3]);   // dx134
    k.c[3] = pref * (-h[2] + im * h[3]);  // dx234
    return k;
}

Quat leray_boundary(const std::function<Quat(const Quat&)>& f, const SectionField& psi,
                    const SphereGrid& grid, const Quat& z) {
    QuatSum acc;
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const Quat& zeta = grid.omega[n];
        const Section s = psi(zeta);
        const cplx D = section_denominator(s, zeta - z);
        const KernelCoeffs k = phi_coeffs(s, D);
        const Quat fv = f(zeta);
        for (int tI = 0; tI < 4; ++tI) {
            acc.add(fv * embed(k.c[tI]), grid.weight[n] * grid.minors[n][tI]);
        }
    }
    return acc.value();
}

Quat leray_homotopy(const std::function<std::array<Quat, 4>(const Quat&)>& g,
                    const SectionField& psi, const SphereGrid& grid, const Quat& z, int nl) {
    std::vector<double> xl, wl;
    gauss_legendre(nl, xl, wl);
    QuatSum acc;
    const cplx im(0.0, 1.0);
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const Quat& zeta = grid.omega[n];
        const Quat q = zeta - z;
        const Section sp = psi(zeta);
        const cplx Dp = section_denominator(sp, q);
        const cplx e1p = sp.s1 / Dp, e2p = sp.s2 / Dp;
        const double Db = q.norm2();
        const cplx e1b = std::conj(tchan(q)) / Db, e2b = uchan(q) / Db;
        const cplx d1 = e1b - e1p, d2 = e2b - e2p;

        // (g ^ dt ^ duc) 3-form components; the i factors sit to the right of g
        const std::array<Quat, 4> gv = g(zeta);
        const std::array<Quat, 4> h{gv[0] * QI - gv[1], gv[0] + gv[1] * QI,
                                    gv[2] * QI + gv[3], gv[3] * QI - gv[2]};

        for (int a = 0; a < nl; ++a) {
            const double lam = 0.5 * xl[a] + 0.5;
            const double w = 0.5 * wl[a];
            const cplx eta1 = (1.0 - lam) * e1p + lam * e1b;
            const cplx eta2 = (1.0 - lam) * e2p + lam * e2b;
            const cplx coef = -(eta1 * d2 - eta2 * d1) / (4.0 * kPi * kPi);
            Quat val{};
            for (int tI = 0; tI < 4; ++tI) {
                val += (h[tI] * embed(coef)) * (grid.weight[n] * grid.minors[n][tI]);
            }
            acc.add(val, w);
        }
    }
    return acc.value();
}

}  // namespace qint
