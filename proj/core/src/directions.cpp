#include "scatter/directions.hpp"

#include <cmath>

#include "scatter/errors.hpp"

namespace scatter {

DirectionSet fibonacci_sphere(int m) {
    if (m < 6)
        throw InvalidArgumentError("fibonacci_sphere: need m >= 6 directions");
    DirectionSet set;
    set.mode = DirectionSet::WeightMode::sphere;
    set.directions.reserve(m);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < m; ++i) {
        const double u = 1.0 - 2.0 * (i + 0.5) / m;  // cos(polar)
        const double s = std::sqrt(1.0 - u * u);
        const double phi = golden * (i + 0.5);
        Vec3 v{s * std::cos(phi), s * std::sin(phi), u};
        set.directions.push_back(v / v.norm());  // renormalize to kill rounding
    }
    set.weights.assign(m, 4.0 * M_PI / m);
    return set;
}

DirectionSet DirectionSet::antipodal_closure() const {
    DirectionSet out;
    out.mode = mode;
    out.directions.reserve(2 * directions.size());
    out.weights.reserve(2 * directions.size());
    for (std::size_t i = 0; i < directions.size(); ++i) {
        out.directions.push_back(directions[i]);
        out.directions.push_back(-directions[i]);
        out.weights.push_back(0.5 * weights[i]);
        out.weights.push_back(0.5 * weights[i]);
    }
    return out;
}

ComplexFrequency::ComplexFrequency(double kappa_, double eta_)
    : kappa(kappa_), eta(eta_) {
    if (kappa < 0.0 || eta < 0.0)
        throw InvalidArgumentError(
            "ComplexFrequency: kappa and eta must be nonnegative");
}

}  // namespace scatter
