#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qint/integration.hpp"
#include "qint/numeric.hpp"

using namespace qint;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

TEST_CASE("gauss_legendre integrates polynomials of degree 2n-1") {
    std::vector<double> x, w;
    gauss_legendre(5, x, w);
    REQUIRE(x.size() == 5);
    for (int deg = 0; deg <= 9; ++deg) {
        double acc = 0.0;
        for (int a = 0; a < 5; ++a) acc += w[a] * std::pow(x[a], deg);
        const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
        CHECK(std::abs(acc - exact) < 1e-14);
    }
    // weights sum to the interval length
    double total = 0.0;
    for (double v : w) total += v;
    CHECK(std::abs(total - 2.0) < 1e-14);
}

TEST_CASE("gauss_legendre node counts up to 128 stay consistent") {
    for (int n : {16, 64, 128}) {
        std::vector<double> x, w;
        gauss_legendre(n, x, w);
        double total = 0.0, parity = 0.0;
        for (int a = 0; a < n; ++a) {
            total += w[a];
            parity += w[a] * x[a];
        }
        CHECK(std::abs(total - 2.0) < 1e-13);
        CHECK(std::abs(parity) < 1e-13);  // symmetric rule
    }
}

TEST_CASE("gauss_legendre_ab shifts to a general interval") {
    std::vector<double> x, w;
    gauss_legendre_ab(8, 0.0, 2.0, x, w);
    double acc = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) acc += w[a] * x[a] * x[a] * x[a];
    CHECK(std::abs(acc - 4.0) < 1e-13);
}

TEST_CASE("sphere grid: unit points and surface area") {
    const SphereGrid g = SphereGrid::build(12, 12, 24);
    REQUIRE(g.size() == 12u * 12u * 24u);
    double worst = 0.0;
    for (const Quat& om : g.omega) worst = std::max(worst, std::abs(om.norm2() - 1.0));
    CHECK(worst < 1e-14);

    // scalar surface integral: sum of weight * area gives |S^3| = 2 pi^2
    NeumaierSum area;
    for (std::size_t n = 0; n < g.size(); ++n) area.add(g.weight[n] * g.area[n]);
    CHECK(std::abs(area.value() - 2.0 * kPi * kPi) < 1e-10);
}

TEST_CASE("sphere grid: minors integrate the coordinate 3-forms") {
    // Stokes: integrating x_{m+1} against its complementary triple gives the
    // ball volume pi^2 / 2 with the sign of dx_{m+1} ^ dx_complement = dvol
    const SphereGrid g = SphereGrid::build(16, 16, 32);
    const double ball = kPi * kPi / 2.0;
    const double want[4] = {ball, -ball, ball, -ball};
    for (int m = 0; m < 4; ++m) {
        // triple index that omits coordinate m+1
        const int tI = 3 - m;
        NeumaierSum acc;
        for (std::size_t n = 0; n < g.size(); ++n) {
            acc.add(g.weight[n] * g.minors[n][tI] * g.omega[n][m]);
        }
        CHECK(std::abs(acc.value() - want[m]) < 1e-9);
    }
}

TEST_CASE("ball exit radius") {
    Rng rng(31);
    for (int s = 0; s < 50; ++s) {
        Quat z{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5),
               rng.uniform(-0.5, 0.5)};
        Quat dir{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        if (dir.norm() < 1e-6) continue;
        const Quat om = dir / dir.norm();
        const double R = ball_exit_radius(z, om);
        CHECK(R > 0.0);
        CHECK(std::abs((z + R * om).norm() - 1.0) < 1e-13);
    }
    // from the center the exit radius is exactly 1
    CHECK(ball_exit_radius(Quat{}, QI) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ball volume by radial rays") {
    const SphereGrid g = SphereGrid::build(10, 10, 20);
    const Quat z{0.2, -0.1, 0.05, 0.15};
    std::vector<double> xr, wr;
    gauss_legendre(16, xr, wr);
    NeumaierSum vol;
    for (std::size_t n = 0; n < g.size(); ++n) {
        const double R = ball_exit_radius(z, g.omega[n]);
        for (std::size_t a = 0; a < xr.size(); ++a) {
            const double r = (0.5 * xr[a] + 0.5) * R;
            const double w = 0.5 * wr[a] * R;
            vol.add(g.weight[n] * g.area[n] * w * r * r * r);
        }
    }
    CHECK(std::abs(vol.value() - kPi * kPi / 2.0) < 1e-6);
}
