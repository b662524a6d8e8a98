#pragma once

#include <iosfwd>
#include <vector>

#include "scatter/directions.hpp"
#include "scatter/green.hpp"
#include "scatter/grid.hpp"
#include "scatter/potential.hpp"

namespace scatter {

// Converged state of one incident-wave solve. u = e^{ik alpha.x} v and
// v = 1 + eps hold nodewise by construction; both are asserted anyway.
struct ScatteringSolution {
    ComplexField u, v, eps;
    Vec3 alpha;
    cdouble k;
    int iterations = 0;
    double residual = 0.0;  // sup-norm of eps - (free - T eps)
    bool converged = false;
};

struct AmplitudeEntry {
    Vec3 beta, alpha;
    cdouble k;
    cdouble A;
};

struct AmplitudeTable {
    std::vector<AmplitudeEntry> entries;
    // columns: beta_x,beta_y,beta_z,alpha_x,alpha_y,alpha_z,re_k,im_k,re_A,im_A
    void to_csv(std::ostream& os, const std::string& config_hash = "") const;
};

// T eps = int G(x-y) q(y) eps(y) dy on the grid.
ComplexField apply_T(const ComplexField& eps, const Potential& q,
                     const KernelParams& params);

// Neumann iteration for eps = -T1 - T eps. Convergence is judged on pairs of
// consecutive terms (the iterated operator is the one with a small norm);
// sustained pairwise growth raises DivergenceError.
ScatteringSolution solve_eps(const Potential& q, const Vec3& alpha, cdouble k,
                             double tol = 1e-8, int max_iter = 200);

// A(beta, alpha, k) = -(1/4pi) int e^{-ik beta.y} q(y) u(y) dy.
// Logs a warning on a non-converged solution.
cdouble scattering_amplitude(const Potential& q, const ScatteringSolution& sol,
                             const Vec3& beta);

// A(beta, alpha0, k) over the product of the direction set and the k list.
AmplitudeTable fixed_direction_dataset(const Potential& q, const Vec3& alpha0,
                                       const DirectionSet& betas,
                                       const std::vector<double>& ks,
                                       double tol = 1e-8);

// Dense-LU oracle for small grids (n <= 13): solves (I + T) eps = -T1 exactly.
ComplexField solve_eps_dense(const Potential& q, const Vec3& alpha, cdouble k);

}  // namespace scatter
