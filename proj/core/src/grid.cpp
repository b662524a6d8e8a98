#include "scatter/grid.hpp"

#include <algorithm>
#include <cmath>

namespace scatter {

BallDomain make_grid(double radius_a, int n) {
    if (radius_a <= 0.0)
        throw InvalidArgumentError("make_grid: radius_a must be positive");
    if (n < 8)
        throw InvalidArgumentError("make_grid: need n >= 8 grid points per axis");
    BallDomain d;
    d.radius_a = radius_a;
    d.grid_n = n;
    d.spacing = 2.0 * radius_a / (n - 1);
    return d;
}

namespace {

template <typename T>
T ball_quad_impl(const BallDomain& d, const std::vector<T>& f) {
    const int n = d.grid_n;
    const double a2 = d.radius_a * d.radius_a;
    T acc{};
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double xi = d.coord(i);
        const double wi = trap_weight_1d(i, n);
        for (int j = 0; j < n; ++j) {
            const double xj = d.coord(j);
            const double wij = wi * trap_weight_1d(j, n);
            const double r2ij = xi * xi + xj * xj;
            for (int k = 0; k < n; ++k, ++idx) {
                const double xk = d.coord(k);
                if (r2ij + xk * xk > a2) continue;
                acc += f[idx] * (wij * trap_weight_1d(k, n));
            }
        }
    }
    const double h3 = d.spacing * d.spacing * d.spacing;
    return acc * h3;
}

}  // namespace

cdouble ball_quadrature(const BallDomain& d, const std::vector<cdouble>& f) {
    return ball_quad_impl(d, f);
}

double ball_quadrature(const BallDomain& d, const std::vector<double>& f) {
    return ball_quad_impl(d, f);
}

double sup_norm(const std::vector<cdouble>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace scatter
