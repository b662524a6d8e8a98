#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "scatter/grid.hpp"

namespace scatter {

// Real-valued compactly supported potential on the grid. The analytic
// evaluator (when present) gives exact off-grid values for the built-in
// families; it is used by the oracles that need sub-grid sampling.
struct Potential {
    BallDomain domain;
    std::vector<double> values;
    int smoothness_ell = 0;
    std::string label;
    std::function<double(const Vec3&)> evaluate;  // may be empty
    double support_r = 0.0;                       // 0 when unknown

    double at(int i, int j, int k) const { return values[domain.index(i, j, k)]; }
    RealField field() const { return RealField{domain, values}; }
};

// q(x) = amplitude * exp(-r^2/(r^2-|x|^2)) inside |x| < r, 0 outside.
// Smooth everywhere, so any declaration > 3 is honest; we declare the
// conservative 4 (bound checks use the declaration).
Potential bump_potential(const BallDomain& domain, double amplitude, double support_r);

// q(x) = amplitude * (1 - |x|^2/r^2)_+^order. order >= 4; declared smoothness = order.
Potential piecewise_smooth_potential(const BallDomain& domain, double amplitude,
                                     double support_r, int order);

// Sample an arbitrary function onto the grid. The caller owns the smoothness
// declaration; the compact-support margin is still enforced.
Potential potential_from_function(const BallDomain& domain,
                                  const std::function<double(const Vec3&)>& f,
                                  int smoothness_ell, const std::string& label,
                                  double support_r = 0.0);

// Direct ball-quadrature Fourier transform, q~(xi) = int q e^{+i xi.x} dx.
// Oracle path, independent of the FFT machinery.
cdouble fourier_of_potential(const Potential& q, const Vec3& xi);

// Flat binary of 64-bit reals behind a short text header (n, a, ell, label).
void save_potential(const Potential& q, const std::string& path);
Potential load_potential(const std::string& path);

}  // namespace scatter
