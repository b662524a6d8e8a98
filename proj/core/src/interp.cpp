#include "scatter/interp.hpp"

#include <array>
#include <cmath>

namespace scatter {

namespace {

// Keys cubic-convolution kernel, a = -1/2.
inline double keys(double x) {
    x = std::fabs(x);
    if (x < 1.0) return ((1.5 * x - 2.5) * x) * x + 1.0;
    if (x < 2.0) return ((-0.5 * x + 2.5) * x - 4.0) * x + 2.0;
    return 0.0;
}

struct CellPos {
    int i0, j0, k0;
    double fx, fy, fz;
    bool inside;
};

inline CellPos locate(const BallDomain& d, const Vec3& p) {
    CellPos c{};
    const double gx = (p.x + d.radius_a) / d.spacing;
    const double gy = (p.y + d.radius_a) / d.spacing;
    const double gz = (p.z + d.radius_a) / d.spacing;
    c.i0 = static_cast<int>(std::floor(gx));
    c.j0 = static_cast<int>(std::floor(gy));
    c.k0 = static_cast<int>(std::floor(gz));
    c.fx = gx - c.i0;
    c.fy = gy - c.j0;
    c.fz = gz - c.k0;
    const int n = d.grid_n;
    c.inside = c.i0 >= 0 && c.i0 <= n - 2 && c.j0 >= 0 && c.j0 <= n - 2 &&
               c.k0 >= 0 && c.k0 <= n - 2;
    return c;
}

}  // namespace

double sample_trilinear(const RealField& f, const Vec3& p) {
    const CellPos c = locate(f.domain, p);
    if (!c.inside) return 0.0;
    double acc = 0.0;
    for (int dx = 0; dx <= 1; ++dx) {
        const double wx = dx ? c.fx : 1.0 - c.fx;
        for (int dy = 0; dy <= 1; ++dy) {
            const double wy = dy ? c.fy : 1.0 - c.fy;
            for (int dz = 0; dz <= 1; ++dz) {
                const double wz = dz ? c.fz : 1.0 - c.fz;
                acc += wx * wy * wz * f.at(c.i0 + dx, c.j0 + dy, c.k0 + dz);
            }
        }
    }
    return acc;
}

double sample_tricubic(const RealField& f, const Vec3& p) {
    const CellPos c = locate(f.domain, p);
    if (!c.inside) return 0.0;
    const int n = f.domain.grid_n;
    if (c.i0 < 1 || c.i0 > n - 3 || c.j0 < 1 || c.j0 > n - 3 || c.k0 < 1 ||
        c.k0 > n - 3)
        return sample_trilinear(f, p);

    std::array<double, 4> wx, wy, wz;
    for (int t = 0; t < 4; ++t) {
        wx[t] = keys(c.fx - (t - 1));
        wy[t] = keys(c.fy - (t - 1));
        wz[t] = keys(c.fz - (t - 1));
    }
    double acc = 0.0;
    for (int dx = 0; dx < 4; ++dx)
        for (int dy = 0; dy < 4; ++dy) {
            double line = 0.0;
            const double* base =
                &f.values[f.domain.index(c.i0 - 1 + dx, c.j0 - 1 + dy, c.k0 - 1)];
            for (int dz = 0; dz < 4; ++dz) line += wz[dz] * base[dz];
            acc += wx[dx] * wy[dy] * line;
        }
    return acc;
}

}  // namespace scatter
