#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qint/numeric.hpp"
#include "qint/quaternion.hpp"

namespace qint {

// Index triples of the four 3-form components, in fixed order.
// 0: dx123, 1: dx124, 2: dx134, 3: dx234.
inline constexpr std::array<std::array<int, 3>, 4> kTriples{{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};

// Tensor Gauss-Legendre grid on S^3.
//
// Angles th1, th2 in [0, pi] and th3 in [0, 2 pi], point
//   x = (cos th1, sin th1 cos th2, sin th1 sin th2 cos th3, sin th1 sin th2 sin th3).
// For 3-form integrands each node carries the four 3x3 minors of the angle
// tangents; orientation is outward (the kernel period comes out +e).
// Measure (scalar) integrals additionally need the stored area element
// sin^2 th1 sin th2, which the minors would otherwise supply implicitly.
struct SphereGrid {
    std::vector<Quat> omega;                       // unit points
    std::vector<std::array<double, 4>> minors;     // per node, per triple
    std::vector<double> weight;                    // GL weight product
    std::vector<double> area;                      // sin^2 th1 sin th2

    std::size_t size() const { return omega.size(); }

    // n1 x n2 x n3 nodes; the convention used everywhere here is (N, N, 2N)
    static SphereGrid build(int n1, int n2, int n3);
};

// Distance from z to the unit sphere along direction omega (unit), i.e. the
// positive root of |z + R omega| = 1. Requires |z| < 1.
double ball_exit_radius(const Quat& z, const Quat& omega);

// Nodes/weights of Gauss-Legendre on [a, b].
void gauss_legendre_ab(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

}  // namespace qint
