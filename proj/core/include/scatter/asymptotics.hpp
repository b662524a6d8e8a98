#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scatter/directions.hpp"
#include "scatter/potential.hpp"

namespace scatter {

// One sweep point: a measured quantity against the model value or fit.
struct EstimateRow {
    double kappa = 0.0;
    double eta = 0.0;
    double measured = 0.0;
    double bound_or_fit = 0.0;
};

struct EstimateReport {
    std::vector<EstimateRow> rows;
    double fitted_exponent = 0.0;
    double fitted_constant = 0.0;
    bool verdict = false;
    std::string note;

    void to_csv(std::ostream& os, const std::string& config_hash = "") const;
    void summary(std::ostream& os) const;
};

// eta(kappa) = ln(kappa)/a, the single matching-height curve used by sweeps.
inline double eta_rule_log(double kappa, double radius_a) {
    return std::log(kappa) / radius_a;
}

// Measures |p~((kappa+i eta) beta)| over the sweep, fits the smallest c with
//   |p~| <= c e^{a eta} (1 + kappa^2 + eta^2)^{-ell/2}
// on every point, and fits the kappa-decay exponent at eta = 0.
// verdict: exponent <= -(ell - 0.5) and the fitted bound dominates the sweep.
EstimateReport decay_bound_check(const Potential& p, const DirectionSet& betas,
                                 const std::vector<double>& kappas,
                                 const std::vector<double>& etas);

// Height eta(kappa) at which max_beta |p~((kappa+i eta) beta)| returns to the
// real-frequency global maximum. Bisection on the growing envelope; the
// direction set is closed under the antipodal map first.
struct FindEtaResult {
    double eta = 0.0;
    double envelope = 0.0;   // achieved max_beta |p~|
    double target = 0.0;     // the real-frequency maximum
    int bisections = 0;
};
FindEtaResult find_eta(const Potential& p, double kappa, const DirectionSet& betas,
                       double tol = 1e-6, double eta_cap = 0.0);

// Contraction factor nu(kappa,eta) = sup_beta int |e~((kappa+i eta)beta - s)| ds.
enum class NuMode {
    leading_term,  // e~ = q~(xi) / (xi^2 - 2k beta.xi), 2k = kappa + i eta
    measured_eps   // e~ from a converged real-k solve at 2k = kappa
};
struct NuStats {
    double skipped_fraction = 0.0;
    double tail_bound = 0.0;  // analytic estimate of the out-of-box remainder
};
double nu_functional(NuMode mode, const Potential& q, double kappa, double eta,
                     const DirectionSet& betas, NuStats* stats = nullptr,
                     int padding = 2, double margin = 1.0);

// J(kappa,eta,ell) = 2pi int_0^inf dr r int_-1^1 dt
//   [ (r-kappa t)^2 + eta^2 t^2 ]^{-1/2} (1 + gamma + r^2 - 2 r kappa t)^{-ell/2}
// with gamma = kappa^2 + eta^2, plus the closed split used to bound it:
//   J <= 2pi sqrt(gamma)/eta * 1/((ell-2) kappa) * Jcal,
//   Jcal = int_0^inf dr/r [ (w^2+r^2-2kr)^{-b} - (w^2+r^2+2kr)^{-b} ],
// b = ell/2-1, w^2 = 1+gamma, decomposed as J1 + J2 and J21 = j1 + j2.
struct JIntegralResult {
    double J = 0.0;
    double Jcal = 0.0;
    double split_bound = 0.0;
    double J1 = 0.0, J2 = 0.0, j1 = 0.0, j2 = 0.0;
};
JIntegralResult j_integral(double kappa, double eta, int ell);

// Probe-based lower bound for the sup-norm of the iterated integral operator
// T^2 at wavenumber kappa + i eta: max over random smooth probe fields (plus
// the constant field) of |T^2 f|_sup / |f|_sup.
double t2_norm_estimate(const Potential& q, double kappa, double eta, int probes,
                        std::uint64_t seed = 0x5ca77e3u);

// Oscillatory two-center integral
//   I1(x,y) = int_ball e^{i(kappa+i eta)(|x-z|+|z-y|)} / (|x-z||z-y|) q(z) dz
// in prolate spheroidal coordinates (s,t,psi) with focal half-distance
// l = |x-y|/2 and Jacobian l^3 (s^2 - t^2).
cdouble two_center_integral_spheroidal(const Potential& q, const Vec3& x,
                                       const Vec3& y, double kappa, double eta);
// Direct Cartesian quadrature of the same integral on a refined grid (oracle).
cdouble two_center_integral_direct(const Potential& q, const Vec3& x, const Vec3& y,
                                   double kappa, double eta, int n_refined = 121);

// Volume of the spheroidal shell s in [1, s1] by the (s,t,psi) quadrature,
// against the closed form (4pi/3) l^3 s1 (s1^2 - 1); returns the relative gap.
double spheroidal_jacobian_check(double focal_half, double s1);

}  // namespace scatter
