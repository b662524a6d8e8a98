#pragma once

#include "scatter/grid.hpp"
#include "scatter/potential.hpp"
#include "scatter/vec3.hpp"

namespace scatter {

// Wavenumber (Im k >= 0) and the factoring direction of the kernel.
struct KernelParams {
    cdouble k;
    Vec3 beta;

    KernelParams(cdouble k_, const Vec3& beta_);
};

// e^{ik|x-y|} / (4 pi |x-y|)
cdouble free_green(const Vec3& x, const Vec3& y, cdouble k);

// e^{ik[|z| - beta.z]} / (4 pi |z|), z = x - y
cdouble factored_green(const Vec3& x_minus_y, const KernelParams& params);

// Closed-form symbol 1 / (xi^2 - 2k beta.xi); throws on the characteristic set.
cdouble green_symbol(const Vec3& xi, cdouble k, const Vec3& beta);

enum class ConvMethod { automatic, direct, fft };

// out(x_i) = sum_j G(x_i - y_j) f(y_j) h^3 over the source grid, with the
// diagonal 1/|z| weight replaced by its analytic mean over a half-spacing
// sphere. Direct summation for small grids, padded cyclic FFT otherwise;
// the two agree to rounding.
ComplexField convolve_green(const ComplexField& f, const KernelParams& params,
                            ConvMethod method = ConvMethod::automatic);

// Same integral evaluated on the enlarged grid of n_out^3 nodes sharing the
// source origin and spacing (source support stays the original box).
ComplexField convolve_green_extended(const ComplexField& f, const KernelParams& params,
                                     int n_out);

// Evaluation on the n_out-periodic torus: the cyclic operator whose in-box
// restriction coincides with convolve_green. Used by the Fourier-domain
// residual, where the cyclic convolution theorem must hold exactly.
ComplexField convolve_green_cyclic(const ComplexField& f, const KernelParams& params,
                                   int n_out);

// Diagonal correction weight: mean of 1/r over a sphere of radius h/2,
// divided by 4 pi (the h^3 cell volume is applied by the convolution).
inline double self_node_weight(double h) { return 3.0 / (4.0 * M_PI * h); }

}  // namespace scatter
