#include "qint/numeric.hpp"

#include <cmath>

namespace qint {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double pi = 3.14159265358979323846264338327950288;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * xi * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
            const double dx = p0 / pp;
            xi -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        x[i] = -xi;
        x[n - 1 - i] = xi;
        w[i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace qint
