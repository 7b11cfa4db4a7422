#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qint/corpus.hpp"
#include "qint/dbar.hpp"
#include "qint/numeric.hpp"
#include "qint/quaternion.hpp"

using namespace qint;

namespace {

constexpr double kSupport = 0.8;

double bump(const Quat& z) {
    const double r2 = z.norm2() / (kSupport * kSupport);
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r2));
}

}  // namespace

TEST_CASE("dbar of conjugation and of the identity") {
    const QuatFn fconj = [](const Quat& q) { return q.conj(); };
    const QuatFn fid = [](const Quat& q) { return q; };
    const Quat z{0.3, -0.1, 0.2, 0.4};
    const DbarParts pc = dbar_apply(fconj, z);
    CHECK((pc.gamma - QE).max_abs() < 1e-10);
    CHECK(pc.delta.max_abs() < 1e-10);
    const DbarParts pi = dbar_apply(fid, z);
    CHECK(pi.gamma.max_abs() < 1e-10);
    CHECK(pi.delta.max_abs() < 1e-10);
}

TEST_CASE("channel class membership of two-sided linear maps") {
    // a z b + c lies in the class exactly when b is in span(e, i)
    Rng rng(51);
    for (int s = 0; s < 10; ++s) {
        const Quat z{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const QuatFn fin = [](const Quat& q) { return kCorpusA * q * kCorpusB + kCorpusConst; };
        CHECK(cr_residual(fin, z) < 1e-9);
        const QuatFn fout = [](const Quat& q) { return kCorpusA * q * QJ + kCorpusConst; };
        CHECK(cr_residual(fout, z) > 0.1);
        const QuatFn fconj = [](const Quat& q) { return q.conj(); };
        CHECK(cr_residual(fconj, z) > 0.4);
    }
}

TEST_CASE("corpus entries satisfy the channel equations") {
    const std::vector<Quat> pts = interior_points(52, 5, 0.6);
    for (const CorpusEntry& e : holomorphic_corpus()) {
        for (const Quat& z : pts) CHECK(cr_residual(e.f, z) < 1e-8);
    }
    for (const CorpusEntry& e : contrast_corpus()) {
        double worst = 0.0;
        for (const Quat& z : pts) worst = std::max(worst, cr_residual(e.f, z));
        CHECK(worst > 0.1);
    }
}

TEST_CASE("slice solver inverts gamma on a radial bump") {
    const QuatFn f = [](const Quat& z) { return bump(z) * QE; };
    const SliceSolver solver(f, kSupport);
    const QuatFn u = [&](const Quat& z) { return solver(z); };

    const Quat pts[] = {{0.0, 0.0, 0.0, 0.0},
                        {0.2, -0.1, 0.15, 0.05},
                        {-0.35, 0.35, 0.0, -0.35},
                        {0.1, 0.3, -0.2, 0.25}};
    for (const Quat& z : pts) {
        CHECK((dbar_apply(u, z).gamma - f(z)).max_abs() < 5e-2);
    }
    // outside the support the transform vanishes identically
    CHECK(solver(Quat{0.0, 0.0, 0.0, 0.9}).max_abs() == 0.0);
    CHECK(solver(Quat{0.1, -0.2, 0.85, 0.1}).max_abs() == 0.0);
}

TEST_CASE("slice solver handles the second channel slot") {
    // datum in the u channel exercises the conjugated kernel branch
    const QuatFn f = [](const Quat& z) { return bump(z) * QJ; };
    const SliceSolver solver(f, kSupport);
    const QuatFn u = [&](const Quat& z) { return solver(z); };
    const Quat pts[] = {{0.1, 0.05, -0.2, 0.15}, {-0.2, 0.3, 0.1, 0.0}};
    for (const Quat& z : pts) {
        CHECK((dbar_apply(u, z).gamma - f(z)).max_abs() < 5e-2);
    }
}

TEST_CASE("slice solver is linear") {
    const QuatFn f = [](const Quat& z) { return bump(z) * QE; };
    const QuatFn f2 = [](const Quat& z) { return (2.0 * bump(z)) * QE; };
    const SliceSolver s1(f, kSupport);
    const SliceSolver s2(f2, kSupport);
    for (const Quat& z : {Quat{0.1, 0.05, -0.2, 0.15}, Quat{-0.2, 0.3, 0.1, 0.0}}) {
        CHECK((s2(z) - 2.0 * s1(z)).max_abs() < 1e-10);
    }
}

TEST_CASE("two-slot compatibility") {
    const QuatFn2 g = [](const std::array<Quat, 2>& z) {
        const Quat& z1 = z[0];
        const Quat& z2 = z[1];
        const Quat extra{std::sin(z1.w + z2.x), 0.0, 0.2 * z1.z * z2.y, 0.0};
        return z1 * z2 + 0.3 * z2 * (z2 * z1) + extra;
    };
    const QuatFn2 f1 = [&g](const std::array<Quat, 2>& z) { return gamma_l(g, z, 0); };
    const QuatFn2 f2 = [&g](const std::array<Quat, 2>& z) { return gamma_l(g, z, 1); };

    Rng rng(53);
    std::vector<std::array<Quat, 2>> pts;
    for (int s = 0; s < 4; ++s) {
        pts.push_back({Quat{rng.normal(), rng.normal(), rng.normal(), rng.normal()} * 0.3,
                       Quat{rng.normal(), rng.normal(), rng.normal(), rng.normal()} * 0.3});
    }
    CHECK(compat_residual(f1, f2, pts) < 1e-6);

    // swapping one component breaks the cross-derivative symmetry
    const QuatFn2 bad1 = [](const std::array<Quat, 2>& z) { return z[1].conj(); };
    const QuatFn2 bad2 = [](const std::array<Quat, 2>&) { return Quat{}; };
    CHECK(compat_residual(bad1, bad2, pts) > 0.5);
}
