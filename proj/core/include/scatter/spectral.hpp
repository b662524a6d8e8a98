#pragma once

#include "scatter/directions.hpp"
#include "scatter/grid.hpp"
#include "scatter/potential.hpp"

namespace scatter {

struct ScatteringSolution;  // solver.hpp

// Grid transform under the fixed +i forward convention,
//   g~(xi) = int g(x) e^{+i xi.x} dx,  g(x) = (2pi)^-3 int g~ e^{-i xi.x} dxi.
// Dual nodes follow DFT frequency order: component m in [0,N) encodes the
// integer frequency m, or m-N when m >= N/2; xi = 2 pi m' / (N h).
struct SpectralField {
    int n_dual = 0;          // N, nodes per axis
    double spacing = 0.0;    // spatial h the transform was taken with
    double origin = 0.0;     // spatial origin (=-a)
    std::vector<cdouble> values;

    double freq_spacing() const { return 2.0 * M_PI / (n_dual * spacing); }
    int freq_index(int m) const { return m < n_dual / 2 ? m : m - n_dual; }
    double xi1(int m) const { return freq_spacing() * freq_index(m); }
    Vec3 xi(int i, int j, int k) const { return {xi1(i), xi1(j), xi1(k)}; }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_dual + j) * n_dual + k;
    }
    cdouble at(int i, int j, int k) const { return values[index(i, j, k)]; }
};

// Zero-padded DFT scaled by the cell volume; approximates the continuum
// transform of the grid samples. padding >= 1 multiplies the box size.
SpectralField forward_ft(const ComplexField& f, int padding);
SpectralField forward_ft(const RealField& f, int padding);
inline SpectralField forward_ft(const Potential& q, int padding) {
    return forward_ft(q.field(), padding);
}

// Transform of a field already living on the full padded box (no extra padding).
SpectralField forward_ft_whole(const ComplexField& f);

// Exact algebraic inverse of forward_ft, cropped to the target grid.
ComplexField inverse_ft(const SpectralField& s, const BallDomain& target);

// Plot-ready plane slice xi_3 = const: rows xi1, xi2, re, im.
void spectral_slice_csv(const SpectralField& s, int k_index, std::ostream& os,
                        const std::string& config_hash = "");

// | h^3 sum |g|^2  -  (2pi)^-3 dxi^3 sum |g~|^2 | / (h^3 sum |g|^2)
double parseval_check(const ComplexField& f, int padding);

// Max relative error between F(f*g) (direct padded-sum convolution, then
// transform) and f~ g~ over dual nodes carrying significant spectrum.
double convolution_check(const RealField& f, const RealField& g, int padding);

// p~((kappa + i eta) beta) by two routes: direct 3-D quadrature of
// p e^{(i kappa - eta) beta.x}, and the 1-D transform of the transverse-plane
// profile. Returns the profile-path value; both exposed for cross-checks.
struct TwoPathTransform {
    cdouble direct_3d;
    cdouble radon_1d;
    double rel_diff;
};
TwoPathTransform complex_freq_transform_paths(const Potential& p, const Vec3& beta,
                                              double kappa, double eta);
cdouble complex_freq_transform(const Potential& p, const Vec3& beta, double kappa,
                               double eta);

// Residual of the Fourier-domain equation
//   eps~(xi) = -q~(xi)/(xi^2-2k a.xi) - F(q eps)(xi)/(xi^2-2k a.xi)
// for a converged solution, with eps~ taken from the padded cyclic system so
// the convolution theorem is exact and the residual isolates the symbol
// discrepancy. Nodes with |denominator| < margin are skipped and counted;
// the quoted figure is the median pointwise relative deviation over the
// resolved band |xi| <= pi/(2h) (the grid cannot carry the kernel's symbol
// beyond half-Nyquist).
struct EpsTildeResidual {
    double median = 0.0;
    double quantile90 = 0.0;
    double skipped_fraction = 0.0;
    std::size_t admissible_nodes = 0;
};
EpsTildeResidual eps_tilde_residual_stats(const ScatteringSolution& sol,
                                          const Potential& q, const Vec3& alpha,
                                          cdouble k, int padding = 2,
                                          double margin = 1.0);
double eps_tilde_residual(const ScatteringSolution& sol, const Potential& q,
                          const Vec3& alpha, cdouble k, int padding = 2,
                          double margin = 1.0);

}  // namespace scatter
