#pragma once

#include <vector>

#include "scatter/vec3.hpp"

namespace scatter {

// Discretization of the unit sphere with quadrature weights.
// WeightMode::sphere: weights sum to 4*pi; WeightMode::average: weights sum to 1.
struct DirectionSet {
    enum class WeightMode { sphere, average };

    std::vector<Vec3> directions;
    std::vector<double> weights;
    WeightMode mode = WeightMode::sphere;

    std::size_t size() const { return directions.size(); }

    // set extended with the antipode of every direction (weights halved)
    DirectionSet antipodal_closure() const;
};

// Near-uniform m-point Fibonacci lattice on S^2, equal weights 4*pi/m.
DirectionSet fibonacci_sphere(int m);

// Complex frequency kappa + i*eta restricted to the closed upper half plane.
struct ComplexFrequency {
    double kappa = 0.0;
    double eta = 0.0;

    ComplexFrequency(double kappa_, double eta_);
    cdouble value() const { return {kappa, eta}; }
};

}  // namespace scatter
