#pragma once

#include <iosfwd>

#include "scatter/directions.hpp"
#include "scatter/grid.hpp"
#include "scatter/potential.hpp"

namespace scatter {

// Plane-integral profile p^(beta, lambda) on uniform offsets in [-a, a].
struct RadonProfile {
    Vec3 beta;
    std::vector<double> lambdas;
    std::vector<double> values;

    void to_csv(std::ostream& os) const;
};

// Deterministic orthonormal frame (e1, e2) of the plane normal to beta.
// Mirror-symmetric under beta -> -beta: e1 flips, e2 is kept, so antipodal
// profiles are computed from identical sample points.
void plane_frame(const Vec3& beta, Vec3& e1, Vec3& e2);

// Integral of f over the planes beta.x = lambda clipped to the ball, by a
// 2-D lattice of spacing h with tricubic grid sampling. m >= 16 offsets.
RadonProfile radon_transform(const Potential& f, const Vec3& beta, int m);

// relative gap between int_ball f dx and int p^(beta,.) dlambda
double moment_identity_check(const Potential& f, const Vec3& beta);

// relative gap between int_ball e^{ik beta.x} f dx and int e^{ik l} p^ dl
double slice_identity_check(const Potential& f, const Vec3& beta, double k);

// max over sampled (beta, lambda) of |p^(beta,l) - p^(-beta,-l)|
double antipodal_identity_check(const Potential& f, const DirectionSet& betas);

}  // namespace scatter
