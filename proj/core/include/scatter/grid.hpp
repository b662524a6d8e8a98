#pragma once

#include <cstddef>
#include <vector>

#include "scatter/errors.hpp"
#include "scatter/vec3.hpp"

namespace scatter {

// Uniform Cartesian grid over the bounding cube [-a,a]^3 of the support ball.
// Node coordinates: coord(i) = -a + i*spacing, i = 0..grid_n-1.
struct BallDomain {
    double radius_a = 1.0;
    int grid_n = 0;
    double spacing = 0.0;

    double coord(int i) const { return -radius_a + i * spacing; }
    Vec3 node(int i, int j, int k) const { return {coord(i), coord(j), coord(k)}; }
    std::size_t num_nodes() const {
        return static_cast<std::size_t>(grid_n) * grid_n * grid_n;
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * grid_n + j) * grid_n + k;
    }
    bool operator==(const BallDomain& o) const {
        return radius_a == o.radius_a && grid_n == o.grid_n;
    }
};

BallDomain make_grid(double radius_a, int n);

// Scalar field sampled on the domain grid, row-major (k fastest).
template <typename T>
struct Field3 {
    BallDomain domain;
    std::vector<T> values;

    Field3() = default;
    explicit Field3(const BallDomain& d, T fill = T{})
        : domain(d), values(d.num_nodes(), fill) {}
    Field3(const BallDomain& d, std::vector<T> v)
        : domain(d), values(std::move(v)) {}

    T& at(int i, int j, int k) { return values[domain.index(i, j, k)]; }
    const T& at(int i, int j, int k) const { return values[domain.index(i, j, k)]; }
    std::size_t size() const { return values.size(); }
};

using ComplexField = Field3<cdouble>;
using RealField = Field3<double>;

// Trapezoidal weight along one axis (1/2 at the cube faces).
inline double trap_weight_1d(int i, int n) {
    return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

// Trapezoidal-weight sum restricted to nodes with |x| <= radius_a, times h^3.
cdouble ball_quadrature(const BallDomain& domain, const std::vector<cdouble>& f);
double ball_quadrature(const BallDomain& domain, const std::vector<double>& f);

inline cdouble ball_quadrature(const ComplexField& f) {
    return ball_quadrature(f.domain, f.values);
}
inline double ball_quadrature(const RealField& f) {
    return ball_quadrature(f.domain, f.values);
}

double sup_norm(const std::vector<cdouble>& v);
double sup_norm(const std::vector<double>& v);

}  // namespace scatter
