#include "qint/integration.hpp"

#include <cmath>

namespace qint {

namespace {

double det3(const std::array<double, 3>& a, const std::array<double, 3>& b,
            const std::array<double, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

SphereGrid SphereGrid::build(int n1, int n2, int n3) {
    const double pi = 3.14159265358979323846264338327950288;
    std::vector<double> t1, w1, t2, w2, t3, w3;
    gauss_legendre_ab(n1, 0.0, pi, t1, w1);
    gauss_legendre_ab(n2, 0.0, pi, t2, w2);
    gauss_legendre_ab(n3, 0.0, 2.0 * pi, t3, w3);

    SphereGrid g;
    g.omega.reserve(static_cast<std::size_t>(n1) * n2 * n3);
    g.minors.reserve(g.omega.capacity());
    g.weight.reserve(g.omega.capacity());
    g.area.reserve(g.omega.capacity());

    for (int i1 = 0; i1 < n1; ++i1) {
        const double s1 = std::sin(t1[i1]), c1 = std::cos(t1[i1]);
        for (int i2 = 0; i2 < n2; ++i2) {
            const double s2 = std::sin(t2[i2]), c2 = std::cos(t2[i2]);
            for (int i3 = 0; i3 < n3; ++i3) {
                const double s3 = std::sin(t3[i3]), c3 = std::cos(t3[i3]);
                g.omega.push_back({c1, s1 * c2, s1 * s2 * c3, s1 * s2 * s3});
                // tangents d/dth1, d/dth2, d/dth3 (rows), coordinates (cols)
                const std::array<double, 4> d1{-s1, c1 * c2, c1 * s2 * c3, c1 * s2 * s3};
                const std::array<double, 4> d2{0.0, -s1 * s2, s1 * c2 * c3, s1 * c2 * s3};
                const std::array<double, 4> d3{0.0, 0.0, -s1 * s2 * s3, s1 * s2 * c3};
                std::array<double, 4> mins{};
                for (int tI = 0; tI < 4; ++tI) {
                    const auto& tr = kTriples[tI];
                    const std::array<double, 3> r1{d1[tr[0] - 1], d1[tr[1] - 1], d1[tr[2] - 1]};
                    const std::array<double, 3> r2{d2[tr[0] - 1], d2[tr[1] - 1], d2[tr[2] - 1]};
                    const std::array<double, 3> r3{d3[tr[0] - 1], d3[tr[1] - 1], d3[tr[2] - 1]};
                    mins[tI] = det3(r1, r2, r3);
                }
                g.minors.push_back(mins);
                g.weight.push_back(w1[i1] * w2[i2] * w3[i3]);
                g.area.push_back(s1 * s1 * s2);
            }
        }
    }
    return g;
}

double ball_exit_radius(const Quat& z, const Quat& omega) {
    const double b = z.w * omega.w + z.x * omega.x + z.y * omega.y + z.z * omega.z;
    const double disc = 1.0 - z.norm2() + b * b;
    return -b + std::sqrt(disc > 0.0 ? disc : 0.0);
}

void gauss_legendre_ab(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    std::vector<double> x0, w0;
    gauss_legendre(n, x0, w0);
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        x[i] = 0.5 * (b - a) * x0[i] + 0.5 * (a + b);
        w[i] = 0.5 * (b - a) * w0[i];
    }
}

}  // namespace qint
