#pragma once

#include <vector>

#include "scatter/potential.hpp"
#include "scatter/solver.hpp"

namespace scatter {

struct FourierSample {
    Vec3 xi;
    cdouble qtilde;
};

// Born-linearized data map: each (beta, k) row becomes xi = k (alpha0 - beta),
// q~_est(xi) = -4 pi A(beta, alpha0, k). |xi| ranges over [0, 2k].
std::vector<FourierSample> data_to_fourier_samples(const AmplitudeTable& table,
                                                   const Vec3& alpha0);

enum class FillMode { zero, radial };

struct ReconstructionResult {
    Potential q_rec;
    double rel_l2_error = 0.0;  // vs ground truth over the grid, NaN if unknown
    double coverage_map = 0.0;  // fraction of dual nodes reached by samples
    double imag_residual = 0.0;  // |Im|/|Re| of the inverse before truncation
    bool low_coverage_warning = false;
};

// Nearest-node binning onto the padded dual grid (collisions averaged),
// Hermitian completion q~(-xi) = conj(q~(xi)), zero or radial fill of the
// unreached nodes, inverse transform, restriction to the real part supported
// in the ball.
ReconstructionResult reconstruct(const std::vector<FourierSample>& samples,
                                 const BallDomain& domain, FillMode fill,
                                 int padding = 2,
                                 const Potential* ground_truth = nullptr);

// Exact Born data -4pi A = q~(k(alpha0-beta)) for a radial analytic potential,
// via a dense radial transform table (no solver involved).
AmplitudeTable exact_born_dataset(const Potential& q, const Vec3& alpha0,
                                  const DirectionSet& betas,
                                  const std::vector<double>& ks);

}  // namespace scatter
