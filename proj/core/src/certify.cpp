#include "scatter/certify.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "scatter/asymptotics.hpp"
#include "scatter/identities.hpp"
#include "scatter/inversion.hpp"
#include "scatter/radon.hpp"
#include "scatter/solver.hpp"
#include "scatter/spectral.hpp"

namespace scatter {

namespace {

// ---- pinned desk scale -------------------------------------------------
constexpr double kRadius = 1.0;
constexpr int kGridN = 33;
constexpr int kDirections = 64;
constexpr double kAmp = 0.1;
constexpr double kSupportR = 0.8;
constexpr double kSolverTol = 1e-8;

// ---- pinned thresholds, one per criterion -------------------------------
constexpr double kFreeCaseTol = 1e-12;                   // 1
constexpr double kResidualTol = 1e-7;                    // 2
constexpr double kIdentityRelTol = 1e-2;                 // 3
constexpr double kIdentityOrderMin = 2.0;                // 3
constexpr double kIdentityFloor = 1e-9;                  // 3
constexpr double kReciprocityTol = 1e-2;                 // 4
constexpr double kRadonMomentTol = 1e-2;                 // 5
constexpr double kRadonSymmetryTol = 1e-6;               // 5
constexpr double kRadonFactorLo = 1.5, kRadonFactorHi = 3.0;  // 5
constexpr double kTwoPathTol = 5e-3;                     // 6
constexpr double kMaxSymmetryTol = 1e-6;                 // 7
constexpr double kDecayExponentMax = -3.5;               // 8
constexpr double kEtaRatioLo = 0.7, kEtaRatioHi = 1.4;   // 9 (per 1/a)
constexpr double kNuLimit = 1.0;                         // 10
constexpr double kT2SlopeMax = -0.8;                     // 12
constexpr double kTwoCenterTol = 2e-2;                   // 13
constexpr double kJacobianTol = 1e-2;                    // 13
constexpr double kBornExactTol = 0.05;                   // 14
constexpr double kBornSolverTol = 0.15;                  // 14
constexpr double kBornRatioLo = 2.5, kBornRatioHi = 6.0; // 14
constexpr double kSpectralResidualTol = 0.05;                  // 15

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

Potential zero_potential(const BallDomain& d) {
    return potential_from_function(
        d, [](const Vec3&) { return 0.0; }, 8, "zero", 0.0);
}

CheckResult check_free_case() {
    CheckResult r{1, "free-case exactness", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q0 = zero_potential(d);
    const Vec3 alpha{0, 0, 1};
    const Vec3 beta = fibonacci_sphere(8).directions[3];
    ScatteringSolution sol = solve_eps(q0, alpha, 5.0, kSolverTol);
    const double eps_sup = sup_norm(sol.eps.values);
    const double amp = std::abs(scattering_amplitude(q0, sol, beta));
    IdentityReport lem = amplitude_difference_check(q0, q0, beta, alpha, 5.0);
    IdentityReport ort =
        orthogonality_relation_check(q0, q0, alpha, beta, 5.0);
    const double worst = std::max(
        {eps_sup, amp, lem.abs_err, std::abs(lem.lhs), std::abs(ort.lhs),
         ort.abs_err});
    r.pass = worst <= kFreeCaseTol && sol.iterations <= 1;
    r.detail = "worst residual " + fmt(worst) + " (tol 1e-12), iterations " +
               std::to_string(sol.iterations);
    return r;
}

CheckResult check_ls_residual() {
    CheckResult r{2, "integral-equation residual", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    ScatteringSolution sol = solve_eps(q, Vec3{0, 0, 1}, 5.0, kSolverTol);
    r.pass = sol.converged && sol.residual < kResidualTol;
    r.detail = "sup residual " + fmt(sol.residual) + " (tol 1e-7), " +
               std::to_string(sol.iterations) + " iterations";
    return r;
}

CheckResult check_amplitude_difference() {
    CheckResult r{3, "amplitude-difference identity", false, ""};
    const Vec3 alpha{0, 0, 1};
    const Vec3 beta = fibonacci_sphere(9).directions[4];
    const double k = 5.0;
    double rel33 = 0.0, rel49 = 0.0;
    cdouble L33, L49, L65;
    for (int n : {33, 49, 65}) {
        BallDomain d = make_grid(kRadius, n);
        Potential q1 = bump_potential(d, kAmp, kSupportR);
        Potential q2 = bump_potential(d, 0.12, 0.55);
        IdentityReport rep = amplitude_difference_check(q1, q2, beta, alpha, k);
        if (n == 33) {
            rel33 = rep.rel_err;
            L33 = rep.lhs;
        } else if (n == 49) {
            rel49 = rep.rel_err;
            L49 = rep.lhs;
        } else {
            L65 = rep.lhs;
        }
    }
    // The discrepancy sits at the solver floor on both grids (the identity is
    // exact for the discrete operator), so the measurable convergence order
    // lives in the identity's value against the refined reference.
    const double d33 = std::abs(L33 - L65), d49 = std::abs(L49 - L65);
    const double order =
        d49 > 0.0 ? std::log(d33 / d49) / std::log(48.0 / 32.0) : 99.0;
    const bool at_floor = rel33 < kIdentityFloor && rel49 < kIdentityFloor;
    r.pass = rel33 < kIdentityRelTol && rel49 < kIdentityRelTol &&
             (order >= kIdentityOrderMin || at_floor);
    r.detail = "rel err n33 " + fmt(rel33) + ", n49 " + fmt(rel49) +
               " (tol 1e-2); value-convergence order " + fmt(order) +
               (at_floor ? " [discrepancy at solver floor]" : "");
    return r;
}

CheckResult check_reciprocity(std::uint64_t seed) {
    CheckResult r{4, "reciprocity", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        Vec3 a{g(rng), g(rng), g(rng)}, b{g(rng), g(rng), g(rng)};
        a = a.normalized();
        b = b.normalized();
        IdentityReport rep = reciprocity_check(q, b, a, 5.0);
        worst = std::max(worst, rep.rel_err);
    }
    r.pass = worst < kReciprocityTol;
    r.detail = "worst rel err " + fmt(worst) + " over 10 pairs (tol 1e-2)";
    return r;
}

CheckResult check_radon_identities() {
    CheckResult r{5, "radon identities + refinement", false, ""};
    const Vec3 beta = fibonacci_sphere(7).directions[3];
    double e17[2], e18[2];
    int gi = 0;
    for (int n : {33, 66}) {
        BallDomain d = make_grid(kRadius, n);
        Potential q = bump_potential(d, kAmp, kSupportR);
        e17[gi] = moment_identity_check(q, beta);
        e18[gi] = slice_identity_check(q, beta, 5.0);
        ++gi;
    }
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    DirectionSet dirs = fibonacci_sphere(16);
    const double sym = antipodal_identity_check(q, dirs);
    Potential shifted = potential_from_function(
        d,
        [](const Vec3& p) {
            const Vec3 c{0.15, -0.1, 0.05};
            const double r2 = 0.55 * 0.55;
            const double d2 = (p - c).norm2();
            return d2 < r2 ? 0.1 * std::exp(-r2 / (r2 - d2)) : 0.0;
        },
        8, "shifted-bump", 0.0);
    const double sym_shift = antipodal_identity_check(shifted, dirs);

    const double f17 = e17[1] > 0.0 ? e17[0] / e17[1] : 1e9;
    const double f18 = e18[1] > 0.0 ? e18[0] / e18[1] : 1e9;
    const bool identities = e17[0] < kRadonMomentTol && e18[0] < kRadonMomentTol &&
                            sym < kRadonSymmetryTol &&
                            sym_shift < kRadonSymmetryTol;
    const bool improves = e17[1] < e17[0] && e18[1] < e18[0];
    const bool factors = f17 >= kRadonFactorLo && f17 <= kRadonFactorHi &&
                         f18 >= kRadonFactorLo && f18 <= kRadonFactorHi;
    r.pass = identities && improves && factors;
    r.detail = "moment " + fmt(e17[0]) + ", slice " + fmt(e18[0]) +
               " (tol 1e-2); symmetry " + fmt(std::max(sym, sym_shift)) +
               " (tol 1e-6); refinement factors " + fmt(f17) + ", " + fmt(f18) +
               " (window [1.5,3])";
    return r;
}

CheckResult check_two_path() {
    CheckResult r{6, "complex-frequency two-path agreement", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    const Vec3 beta = fibonacci_sphere(9).directions[4];
    double worst = 0.0;
    for (double kap : {0.0, 2.0, 5.0, 8.0})
        for (double eta : {0.0, 1.0, 2.5, 5.0}) {
            TwoPathTransform t = complex_freq_transform_paths(q, beta, kap, eta);
            worst = std::max(worst, t.rel_diff);
        }
    r.pass = worst < kTwoPathTol;
    r.detail = "worst rel gap " + fmt(worst) + " over eta*a <= 5 (tol 5e-3)";
    return r;
}

// |p~((kappa - i eta) beta)| from the profile, eta weighting flipped
double envelope_lower(const Potential& p, const DirectionSet& set, double kappa,
                      double eta) {
    double best = 0.0;
    const int m = 2 * p.domain.grid_n;
    for (const Vec3& b : set.directions) {
        RadonProfile prof = radon_transform(p, b, m);
        cdouble acc{};
        const double dl = prof.lambdas[1] - prof.lambdas[0];
        for (std::size_t i = 0; i < prof.lambdas.size(); ++i) {
            const double tw = (i == 0 || i + 1 == prof.lambdas.size()) ? 0.5 : 1.0;
            const double lam = prof.lambdas[i];
            acc += tw * prof.values[i] * std::exp(cdouble(eta * lam, kappa * lam));
        }
        best = std::max(best, std::abs(acc * dl));
    }
    return best;
}

CheckResult check_max_symmetry() {
    CheckResult r{7, "conjugate-height max symmetry", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    DirectionSet set = fibonacci_sphere(kDirections).antipodal_closure();
    double worst = 0.0;
    for (int family = 0; family < 2; ++family) {
        Potential p = family == 0
                          ? bump_potential(d, kAmp, kSupportR)
                          : piecewise_smooth_potential(d, kAmp, kSupportR, 4);
        for (double kap : {4.0, 8.0})
            for (double eta : {1.0, 2.0}) {
                double up = 0.0;
                for (const Vec3& b : set.directions)
                    up = std::max(
                        up, std::abs(complex_freq_transform(p, b, kap, eta)));
                const double down = envelope_lower(p, set, kap, eta);
                worst = std::max(worst, std::abs(up - down) /
                                            std::max(up, down));
            }
    }
    r.pass = worst < kMaxSymmetryTol;
    r.detail = "worst rel gap " + fmt(worst) + " (tol 1e-6)";
    return r;
}

CheckResult check_decay_bound() {
    CheckResult r{8, "spectral decay bound", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential p = piecewise_smooth_potential(d, kAmp, kSupportR, 4);
    EstimateReport rep = decay_bound_check(p, fibonacci_sphere(6),
                                           {4.0, 8.0, 16.0, 32.0, 64.0},
                                           {0.0, 1.0, 2.0, 3.0});
    r.pass = rep.verdict && rep.fitted_exponent <= kDecayExponentMax;
    r.detail = "fitted exponent " + fmt(rep.fitted_exponent) +
               " (max -3.5); " + rep.note;
    return r;
}

CheckResult check_matching_height() {
    CheckResult r{9, "matching-height growth law", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential p = piecewise_smooth_potential(d, kAmp, kSupportR, 4);
    DirectionSet set = fibonacci_sphere(16);
    std::vector<double> ratios;
    bool converged = true;
    std::string etas;
    for (double kap : {16.0, 32.0, 64.0, 128.0}) {
        try {
            FindEtaResult res = find_eta(p, kap, set, 1e-4);
            ratios.push_back(res.eta / std::log(kap));
            etas += fmt(res.eta) + " ";
        } catch (const Error&) {
            converged = false;
        }
    }
    bool window = false, drift_shrinks = false;
    if (converged && ratios.size() == 4) {
        window = ratios.back() >= kEtaRatioLo / kRadius &&
                 ratios.back() <= kEtaRatioHi / kRadius;
        const double d1 = std::fabs(ratios[1] - ratios[0]);
        const double d2 = std::fabs(ratios[2] - ratios[1]);
        const double d3 = std::fabs(ratios[3] - ratios[2]);
        drift_shrinks = d3 < d2 && d2 < d1;
    }
    r.pass = converged && window && drift_shrinks;
    std::string rs;
    for (double v : ratios) rs += fmt(v) + " ";
    r.detail = "eta: " + etas + "-> eta/ln(kappa): " + rs +
               "(window [0.7,1.4] at kappa=128: " + (window ? "yes" : "NO") +
               ", drift shrinks: " + (drift_shrinks ? "yes" : "NO") + ")";
    return r;
}

CheckResult check_nu_contraction() {
    CheckResult r{10, "contraction-factor sweep", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    DirectionSet set = fibonacci_sphere(kDirections);
    std::vector<double> nus;
    std::string vals;
    for (double kap : {8.0, 16.0, 32.0, 64.0}) {
        const double nu = nu_functional(NuMode::leading_term, q, kap,
                                        eta_rule_log(kap, kRadius), set);
        nus.push_back(nu);
        vals += fmt(nu) + " ";
    }
    bool monotone = true;
    for (std::size_t i = 1; i < nus.size(); ++i)
        if (nus[i] >= nus[i - 1]) monotone = false;
    r.pass = monotone && nus.back() < kNuLimit;
    r.detail = "nu: " + vals + "(monotone " + (monotone ? "yes" : "NO") +
               ", final < 1: " + (nus.back() < 1.0 ? "yes" : "NO") + ")";
    return r;
}

CheckResult check_j_integral() {
    CheckResult r{11, "oscillatory tail integral decay", false, ""};
    std::vector<double> kj;
    bool bounded = true;
    std::string vals;
    for (double kap : {8.0, 16.0, 32.0, 64.0, 128.0}) {
        JIntegralResult res = j_integral(kap, eta_rule_log(kap, kRadius), 4);
        kj.push_back(kap * res.J);
        vals += fmt(kap * res.J) + " ";
        if (res.split_bound < res.J) bounded = false;
    }
    bool monotone = true;
    for (std::size_t i = 1; i < kj.size(); ++i)
        if (kj[i] >= kj[i - 1]) monotone = false;
    r.pass = monotone && bounded;
    r.detail = "kappa*J: " + vals + "(decreasing " + (monotone ? "yes" : "NO") +
               ", split bound dominates " + (bounded ? "yes" : "NO") + ")";
    return r;
}

CheckResult check_t2_norm(std::uint64_t seed) {
    CheckResult r{12, "iterated-operator norm decay", false, ""};
    BallDomain d = make_grid(kRadius, 25);
    Potential q = bump_potential(d, kAmp, kSupportR);
    std::vector<double> ks{8.0, 16.0, 32.0, 64.0}, vs;
    for (double kap : ks)
        vs.push_back(
            t2_norm_estimate(q, kap, eta_rule_log(kap, kRadius), 8, seed));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const double lx = std::log(ks[i]), ly = std::log(vs[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope =
        (ks.size() * sxy - sx * sy) / (ks.size() * sxx - sx * sx);
    r.pass = slope <= kT2SlopeMax;
    r.detail = "log-log slope " + fmt(slope) + " (max -0.8)";
    return r;
}

CheckResult check_two_center() {
    CheckResult r{13, "two-center quadrature", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    const Vec3 x{0.3123, -0.1071, 0.2234}, y{-0.2512, 0.2031, -0.1513};
    const cdouble sph =
        two_center_integral_spheroidal(q, x, y, 10.0, eta_rule_log(10.0, kRadius));
    const cdouble car = two_center_integral_direct(q, x, y, 10.0,
                                                   eta_rule_log(10.0, kRadius));
    const double gap = std::abs(sph - car) / std::abs(car);
    double first = 0.0, last = 0.0;
    bool bounded = true;
    for (double kap : {8.0, 16.0, 32.0, 64.0}) {
        const cdouble v = two_center_integral_spheroidal(
            q, x, y, kap, eta_rule_log(kap, kRadius));
        const double scaled = kap * std::abs(v);
        if (kap == 8.0) first = scaled;
        last = scaled;
        if (scaled > 1.5 * first) bounded = false;
    }
    const double jac = spheroidal_jacobian_check(0.37, 2.5);
    r.pass = gap < kTwoCenterTol && bounded && jac < kJacobianTol;
    r.detail = "two-path gap " + fmt(gap) + " (tol 2e-2); kappa*|I| " +
               fmt(first) + " -> " + fmt(last) + "; jacobian gap " + fmt(jac) +
               " (tol 1e-2)";
    return r;
}

CheckResult check_born_inversion() {
    CheckResult r{14, "born inversion loop", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    const Vec3 alpha0{0, 0, 1};
    DirectionSet betas = fibonacci_sphere(400);
    std::vector<double> ks;
    for (double k = 0.5; k <= 10.001; k += 0.25) ks.push_back(k);

    auto run = [&](bool solver_data, const Potential& truth) {
        AmplitudeTable data =
            solver_data ? fixed_direction_dataset(truth, alpha0, betas, ks,
                                                  kSolverTol)
                        : exact_born_dataset(truth, alpha0, betas, ks);
        auto samples = data_to_fourier_samples(data, alpha0);
        return reconstruct(samples, d, FillMode::radial, 2, &truth);
    };

    Potential q5 = bump_potential(d, 0.05, kSupportR);
    Potential q25 = bump_potential(d, 0.025, kSupportR);

    ReconstructionResult exact5 = run(false, q5);
    ReconstructionResult solver5 = run(true, q5);
    ReconstructionResult exact25 = run(false, q25);
    ReconstructionResult solver25 = run(true, q25);

    // second-order data error isolated against the exact-Born reconstruction;
    // the raw rel_l2 is floor-dominated and amplitude-independent
    auto model_err = [](const ReconstructionResult& s,
                        const ReconstructionResult& e) {
        double acc = 0.0;
        for (std::size_t m = 0; m < s.q_rec.values.size(); ++m) {
            const double dv = s.q_rec.values[m] - e.q_rec.values[m];
            acc += dv * dv;
        }
        return std::sqrt(acc);
    };
    const double m5 = model_err(solver5, exact5);
    const double m25 = model_err(solver25, exact25);
    const double ratio = m25 > 0.0 ? m5 / m25 : 0.0;

    r.pass = exact5.rel_l2_error < kBornExactTol &&
             solver5.rel_l2_error < kBornSolverTol && ratio >= kBornRatioLo &&
             ratio <= kBornRatioHi;
    r.detail = "exact-data rel L2 " + fmt(exact5.rel_l2_error) +
               " (tol 0.05); solver-data " + fmt(solver5.rel_l2_error) +
               " (tol 0.15); halving ratio " + fmt(ratio) +
               " (window [2.5,6]); coverage " + fmt(exact5.coverage_map);
    return r;
}

CheckResult check_spectral_residual() {
    CheckResult r{15, "fourier-domain residual", false, ""};
    BallDomain d = make_grid(kRadius, kGridN);
    Potential q = bump_potential(d, kAmp, kSupportR);
    const Vec3 alpha{0, 0, 1};
    ScatteringSolution sol = solve_eps(q, alpha, 10.0, kSolverTol);
    EpsTildeResidual res = eps_tilde_residual_stats(sol, q, alpha, 10.0, 2, 1.0);
    // low-k context value, same definition
    ScatteringSolution sol2 = solve_eps(q, alpha, 2.0, kSolverTol);
    EpsTildeResidual res2 = eps_tilde_residual_stats(sol2, q, alpha, 2.0, 2, 1.0);
    r.pass = res.median < kSpectralResidualTol;
    r.detail = "median residual " + fmt(res.median) + " at k=10 (tol 0.05), q90 " +
               fmt(res.quantile90) + ", skipped " + fmt(res.skipped_fraction) +
               "; k=2 median " + fmt(res2.median);
    return r;
}

}  // namespace

std::string format_check_line(const CheckResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? "0" : "") << r.id
       << " " << r.name << ": " << r.detail;
    return os.str();
}

std::vector<CheckResult> run_all_checks(const CertifyOptions& opts,
                                        std::ostream& log) {
    std::vector<CheckResult> out;
    auto push = [&](CheckResult r) {
        if (opts.verbose) log << format_check_line(r) << std::endl;
        out.push_back(std::move(r));
    };
    push(check_free_case());
    push(check_ls_residual());
    push(check_amplitude_difference());
    push(check_reciprocity(opts.seed));
    push(check_radon_identities());
    push(check_two_path());
    push(check_max_symmetry());
    push(check_decay_bound());
    push(check_matching_height());
    push(check_nu_contraction());
    push(check_j_integral());
    push(check_t2_norm(opts.seed));
    push(check_two_center());
    push(check_born_inversion());
    push(check_spectral_residual());

    if (!opts.outdir.empty()) {
        std::ofstream sum(opts.outdir + "/all_checks_summary.txt");
        for (const auto& r : out) sum << format_check_line(r) << "\n";
    }
    return out;
}

}  // namespace scatter
