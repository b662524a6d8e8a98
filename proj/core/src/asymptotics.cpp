#include "scatter/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "scatter/csv.hpp"
#include "scatter/green.hpp"
#include "scatter/interp.hpp"
#include "scatter/parallel.hpp"
#include "scatter/radon.hpp"
#include "scatter/solver.hpp"
#include "scatter/spectral.hpp"

namespace scatter {

namespace {

using boost::math::quadrature::gauss_kronrod;

// Gauss-Legendre nodes on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// profiles are (kappa, eta)-independent; cache them per direction
struct ProfileCache {
    std::vector<RadonProfile> profiles;

    ProfileCache(const Potential& p, const DirectionSet& set) {
        profiles.resize(set.size());
        const int m = 2 * p.domain.grid_n;
        std::vector<const Vec3*> dirs(set.size());
        for (std::size_t i = 0; i < set.size(); ++i) dirs[i] = &set.directions[i];
        parallel_for(set.size(), [&](std::size_t i) {
            profiles[i] = radon_transform(p, *dirs[i], m);
        });
    }

    static cdouble transform(const RadonProfile& prof, double kappa, double eta) {
        cdouble acc{};
        const double dl = prof.lambdas[1] - prof.lambdas[0];
        for (std::size_t i = 0; i < prof.lambdas.size(); ++i) {
            const double tw = (i == 0 || i + 1 == prof.lambdas.size()) ? 0.5 : 1.0;
            const double lam = prof.lambdas[i];
            acc += tw * prof.values[i] *
                   std::exp(cdouble(-eta * lam, kappa * lam));
        }
        return acc * dl;
    }

    double envelope(double kappa, double eta) const {
        double best = 0.0;
        for (const auto& prof : profiles)
            best = std::max(best, std::abs(transform(prof, kappa, eta)));
        return best;
    }
};

double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    // least squares on (log x, log y)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(std::max(ys[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

EstimateReport decay_bound_check(const Potential& p, const DirectionSet& betas,
                                 const std::vector<double>& kappas,
                                 const std::vector<double>& etas) {
    const double a = p.domain.radius_a;
    const int ell = p.smoothness_ell;
    for (double eta : etas)
        if (eta * a > 700.0)
            throw OverflowGuardError("decay_bound_check: eta*a exceeds 700");

    ProfileCache cache(p, betas);
    EstimateReport rep;
    double c_fit = 0.0;
    std::vector<double> k0, v0;  // eta = 0 subset for the exponent fit
    for (double kappa : kappas)
        for (double eta : etas) {
            const double meas = cache.envelope(kappa, eta);
            rep.rows.push_back({kappa, eta, meas, 0.0});
            const double weight =
                std::pow(1.0 + kappa * kappa + eta * eta, 0.5 * ell) *
                std::exp(-a * eta);
            c_fit = std::max(c_fit, meas * weight);
            if (eta == 0.0) {
                k0.push_back(kappa);
                v0.push_back(meas);
            }
        }
    rep.fitted_constant = c_fit;
    if (c_fit == 0.0) {  // identically zero potential
        rep.verdict = true;
        rep.note = "zero spectrum";
        return rep;
    }
    for (auto& row : rep.rows)
        row.bound_or_fit = c_fit * std::exp(a * row.eta) /
                           std::pow(1.0 + row.kappa * row.kappa + row.eta * row.eta,
                                    0.5 * ell);
    rep.fitted_exponent = k0.size() >= 2 ? fit_log_slope(k0, v0) : 0.0;

    bool dominated = true;
    for (const auto& row : rep.rows)
        if (row.measured > row.bound_or_fit * (1.0 + 1e-12)) dominated = false;
    rep.verdict = dominated && rep.fitted_exponent <= -(ell - 0.5);
    std::ostringstream note;
    note << "exponent_fit=" << rep.fitted_exponent << " c_fit=" << c_fit
         << " dominated=" << (dominated ? "yes" : "no");
    rep.note = note.str();
    return rep;
}

FindEtaResult find_eta(const Potential& p, double kappa, const DirectionSet& betas,
                       double tol, double eta_cap) {
    const double a = p.domain.radius_a;
    if (eta_cap <= 0.0) eta_cap = 600.0 / a;
    const DirectionSet closed = betas.antipodal_closure();
    ProfileCache cache(p, closed);

    // real-frequency global maximum from the dual grid
    SpectralField qt = forward_ft(p, 2);
    double target = 0.0;
    for (const auto& v : qt.values) target = std::max(target, std::abs(v));
    if (target == 0.0)
        throw InvalidArgumentError("find_eta: potential is identically zero");

    FindEtaResult res;
    res.target = target;
    if (cache.envelope(kappa, 0.0) >= target * (1.0 - tol))
        throw InvalidArgumentError(
            "find_eta: envelope already at the target at eta=0 (kappa too small)");

    double lo = 0.0, hi = 1.0 / a;
    while (cache.envelope(kappa, hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > eta_cap) {
            std::ostringstream msg;
            msg << "find_eta: no crossing below the cap eta=" << eta_cap;
            throw NoCrossingError(msg.str());
        }
    }
    double env = 0.0;
    int it = 0;
    for (; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        env = cache.envelope(kappa, mid);
        if (std::fabs(env - target) <= tol * target) {
            lo = hi = mid;
            break;
        }
        (env < target ? lo : hi) = mid;
        if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
    }
    res.eta = 0.5 * (lo + hi);
    res.envelope = env;
    res.bisections = it;
    return res;
}

double nu_functional(NuMode mode, const Potential& q, double kappa, double eta,
                     const DirectionSet& betas, NuStats* stats, int padding,
                     double margin) {
    const BallDomain& d = q.domain;
    const double a = d.radius_a;
    if (eta < 0.0) throw InvalidArgumentError("nu_functional: eta >= 0");
    if (eta * a > 700.0)
        throw OverflowGuardError("nu_functional: eta*a exceeds 700");
    const int n = d.grid_n;
    const int N = padding * n;
    const cdouble z(kappa, eta);

    // measured mode reuses one real-k solve at 2k = kappa; its epsilon is
    // extended to the padded torus exactly like the Fourier-domain residual
    ComplexField eps_big;
    if (mode == NuMode::measured_eps) {
        const cdouble khalf(0.5 * kappa, 0.0);
        Vec3 alpha = betas.directions.front();
        ScatteringSolution sol = solve_eps(q, alpha, khalf);
        const KernelParams params(khalf, alpha);
        ComplexField qf(d), qe(d);
        for (std::size_t m = 0; m < q.values.size(); ++m) {
            qf.values[m] = q.values[m];
            qe.values[m] = q.values[m] * sol.eps.values[m];
        }
        eps_big = convolve_green_cyclic(qf, params, N);
        ComplexField t2 = convolve_green_cyclic(qe, params, N);
        for (std::size_t m = 0; m < eps_big.values.size(); ++m)
            eps_big.values[m] = -eps_big.values[m] - t2.values[m];
    }

    std::vector<double> per_beta(betas.size(), 0.0);
    std::vector<double> skipped(betas.size(), 0.0);
    std::vector<double> edge_max(betas.size(), 0.0);

    parallel_for(betas.size(), [&](std::size_t ib) {
        const Vec3 beta = betas.directions[ib];
        // numerator at all dual nodes via one modulated transform
        SpectralField num;
        if (mode == NuMode::leading_term) {
            ComplexField Q(d);
            const int nn = d.grid_n;
            std::size_t idx = 0;
            for (int i = 0; i < nn; ++i)
                for (int j = 0; j < nn; ++j)
                    for (int k = 0; k < nn; ++k, ++idx) {
                        const double qv = q.values[idx];
                        if (qv == 0.0) continue;
                        const double bx = beta.dot(d.node(i, j, k));
                        Q.values[idx] =
                            qv * std::exp(cdouble(-eta * bx, kappa * bx));
                    }
            num = forward_ft(Q, padding);
        } else {
            ComplexField Q = eps_big;
            const BallDomain& db = Q.domain;
            std::size_t idx = 0;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k, ++idx) {
                        const double bx = beta.dot(db.node(i, j, k));
                        Q.values[idx] *= std::exp(cdouble(0.0, kappa * bx));
                    }
            num = forward_ft_whole(Q);
        }
        // integrate |num(-s)| / |s^2 - z beta.s|, s = -xi_m
        const double dxi = num.freq_spacing();
        const double cell = dxi * dxi * dxi;
        double acc = 0.0;
        std::size_t skip = 0, tot = 0;
        double edge = 0.0;
        const double s_edge = 0.9 * (M_PI / d.spacing);
        std::size_t idx = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k, ++idx) {
                    const Vec3 xi = num.xi(i, j, k);
                    const Vec3 s = -xi;
                    const cdouble den = s.norm2() - z * beta.dot(s);
                    ++tot;
                    if (std::abs(den) < margin) {
                        ++skip;
                        continue;
                    }
                    const double val = std::abs(num.values[idx]);
                    acc += val / std::abs(den) * cell;
                    if (s.norm() > s_edge) edge = std::max(edge, val);
                }
        per_beta[ib] = acc;
        skipped[ib] = static_cast<double>(skip) / tot;
        edge_max[ib] = edge;
    });

    const double nu = *std::max_element(per_beta.begin(), per_beta.end());
    if (stats) {
        stats->skipped_fraction =
            *std::max_element(skipped.begin(), skipped.end());
        // out-of-box remainder, using the declared smoothness for the decay
        const double S = M_PI / d.spacing;
        const double zmod = std::abs(z);
        const int ell = std::max(3, q.smoothness_ell);
        const double me = *std::max_element(edge_max.begin(), edge_max.end());
        stats->tail_bound = me * 4.0 * M_PI * S * S /
                            ((ell - 2) * std::max(S - zmod, 0.5 * S));
    }
    return nu;
}

JIntegralResult j_integral(double kappa, double eta, int ell) {
    if (ell <= 3) throw InvalidArgumentError("j_integral: need ell > 3");
    if (eta <= 0.0) throw InvalidArgumentError("j_integral: need eta > 0");
    const double gamma = kappa * kappa + eta * eta;
    const double halfell = 0.5 * ell;

    auto B_inner = [&](double r) {
        auto f = [&](double t) {
            const double osc = (r - kappa * t) * (r - kappa * t) +
                               eta * eta * t * t;
            const double pw = 1.0 + gamma + r * r - 2.0 * r * kappa * t;
            return 1.0 / (std::sqrt(osc) * std::pow(pw, halfell));
        };
        // split at the minimizer of the quadratic and at r/kappa
        std::vector<double> pts{-1.0, 1.0};
        const double tstar = kappa * r / gamma;
        if (tstar > -1.0 && tstar < 1.0) pts.push_back(tstar);
        if (kappa > 0.0) {
            const double tr = r / kappa;
            if (tr > -1.0 && tr < 1.0) pts.push_back(tr);
        }
        std::sort(pts.begin(), pts.end());
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            acc += gauss_kronrod<double, 15>::integrate(f, pts[i], pts[i + 1], 12,
                                                        1e-10);
        return acc;
    };

    auto outer = [&](double lo, double hi) {
        return gauss_kronrod<double, 15>::integrate(
            [&](double r) { return r * B_inner(r); }, lo, hi, 12, 1e-9);
    };
    const double rmax = std::max(4.0 * kappa, 200.0);
    JIntegralResult res;
    res.J = 2.0 * M_PI *
            (outer(0.0, 0.5 * kappa) + outer(0.5 * kappa, 2.0 * kappa) +
             outer(2.0 * kappa, rmax));

    // closed split: Jcal = J1 + J2, J21 = j1 + j2
    const double b = halfell - 1.0;
    const double w2 = 1.0 + gamma;
    auto jcal_f = [&](double r) {
        const double m = std::pow(w2 + r * r - 2.0 * kappa * r, -b);
        const double p = std::pow(w2 + r * r + 2.0 * kappa * r, -b);
        return (m - p) / r;
    };
    res.J1 = gauss_kronrod<double, 15>::integrate(jcal_f, 1e-14, 1.0, 12, 1e-11);
    const double rmax2 = std::max(6.0 * kappa, 400.0);
    res.j1 = gauss_kronrod<double, 15>::integrate(jcal_f, 1.0, 0.5 * kappa, 12,
                                                  1e-11);
    res.j2 = gauss_kronrod<double, 15>::integrate(jcal_f, 0.5 * kappa, rmax2, 12,
                                                  1e-11);
    res.J2 = res.j1 + res.j2;
    res.Jcal = res.J1 + res.J2;
    res.split_bound = 2.0 * M_PI * std::sqrt(gamma) / eta / ((ell - 2) * kappa) *
                      res.Jcal;
    return res;
}

double t2_norm_estimate(const Potential& q, double kappa, double eta, int probes,
                        std::uint64_t seed) {
    if (probes < 8) throw InvalidArgumentError("t2_norm_estimate: probes >= 8");
    const BallDomain& d = q.domain;
    const KernelParams params(cdouble(kappa, eta), Vec3{0.0, 0.0, 1.0});
    const double a = d.radius_a;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> freq(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

    double best = 0.0;
    for (int p = 0; p < probes; ++p) {
        ComplexField f(d, cdouble{1.0, 0.0});
        if (p > 0) {
            const double c1 = freq(rng), c2 = freq(rng), c3 = freq(rng);
            const double p1 = phase(rng), p2 = phase(rng), p3 = phase(rng);
            const int n = d.grid_n;
            std::size_t idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k, ++idx) {
                        const Vec3 x = d.node(i, j, k);
                        f.values[idx] = std::cos(c1 * M_PI * x.x / a + p1) *
                                        std::cos(c2 * M_PI * x.y / a + p2) *
                                        std::cos(c3 * M_PI * x.z / a + p3);
                    }
        }
        ComplexField tf = apply_T(f, q, params);
        ComplexField t2f = apply_T(tf, q, params);
        const double denom = sup_norm(f.values);
        if (denom > 0.0) best = std::max(best, sup_norm(t2f.values) / denom);
    }
    return best;
}

namespace {

double potential_value(const Potential& q, const RealField& grid, const Vec3& p) {
    if (q.evaluate) return q.evaluate(p);
    return sample_tricubic(grid, p);
}

}  // namespace

cdouble two_center_integral_spheroidal(const Potential& q, const Vec3& x,
                                       const Vec3& y, double kappa, double eta) {
    if (x.norm() > q.domain.radius_a || y.norm() > q.domain.radius_a)
        throw InvalidArgumentError("two_center_integral: x, y must lie in the ball");
    const Vec3 dvec = x - y;
    const double L = 0.5 * dvec.norm();
    if (L == 0.0)
        throw InvalidArgumentError("two_center_integral: x == y is degenerate");
    const Vec3 c = 0.5 * (x + y);
    const Vec3 u = dvec / (2.0 * L);
    Vec3 e1, e2;
    plane_frame(u, e1, e2);

    const double support = q.support_r > 0.0 ? q.support_r : q.domain.radius_a;
    double smax = (c.norm() + support) / L;
    if (eta > 0.0) {
        // truncate where the damping factor is below 1e-14
        const double scap = 14.0 * std::log(10.0) / (2.0 * eta * L);
        smax = std::min(smax, std::max(1.0 + 1e-9, scap));
    }
    if (smax <= 1.0) return {};

    static thread_local std::vector<double> tx, tw;
    if (tx.size() != 48) gauss_legendre(48, tx, tw);
    constexpr int n_psi = 32;
    const RealField grid = q.field();
    const cdouble z(kappa, eta);

    auto shell_avg = [&](double s) {
        // int over (t, psi) of q at the spheroidal point
        const double rad = std::sqrt(std::max(s * s - 1.0, 0.0));
        double acc = 0.0;
        for (int it = 0; it < 48; ++it) {
            const double t = tx[it];
            const double rho = rad * std::sqrt(1.0 - t * t);
            const Vec3 axial = c + (L * s * t) * u;
            double ring = 0.0;
            for (int ip = 0; ip < n_psi; ++ip) {
                const double psi = 2.0 * M_PI * ip / n_psi;
                const Vec3 p =
                    axial + (L * rho) * (std::cos(psi) * e1 + std::sin(psi) * e2);
                ring += potential_value(q, grid, p);
            }
            acc += tw[it] * ring * (2.0 * M_PI / n_psi);
        }
        return acc;
    };

    auto re_f = [&](double s) {
        const cdouble w = std::exp(2.0 * cdouble(0.0, 1.0) * z * (L * s));
        return (w * shell_avg(s)).real();
    };
    auto im_f = [&](double s) {
        const cdouble w = std::exp(2.0 * cdouble(0.0, 1.0) * z * (L * s));
        return (w * shell_avg(s)).imag();
    };
    const double re =
        gauss_kronrod<double, 31>::integrate(re_f, 1.0, smax, 14, 1e-9);
    const double im =
        gauss_kronrod<double, 31>::integrate(im_f, 1.0, smax, 14, 1e-9);
    return L * cdouble(re, im);
}

cdouble two_center_integral_direct(const Potential& q, const Vec3& x, const Vec3& y,
                                   double kappa, double eta, int n_refined) {
    const double support = q.support_r > 0.0 ? q.support_r : q.domain.radius_a;
    const double h = 2.0 * support / (n_refined - 1);
    const RealField grid = q.field();
    const cdouble z(kappa, eta);
    cdouble acc{};
    for (int i = 0; i < n_refined; ++i) {
        const double px = -support + i * h;
        for (int j = 0; j < n_refined; ++j) {
            const double py = -support + j * h;
            for (int k = 0; k < n_refined; ++k) {
                const Vec3 p{px, py, -support + k * h};
                const double qv = potential_value(q, grid, p);
                if (qv == 0.0) continue;
                const double dx = (p - x).norm();
                const double dy = (p - y).norm();
                if (dx == 0.0 || dy == 0.0)
                    throw SingularEvaluationError(
                        "two_center_integral_direct: node hit a focus");
                acc += qv * std::exp(cdouble(0.0, 1.0) * z * (dx + dy)) / (dx * dy);
            }
        }
    }
    return acc * (h * h * h);
}

double spheroidal_jacobian_check(double focal_half, double s1) {
    if (s1 <= 1.0 || focal_half <= 0.0)
        throw InvalidArgumentError("spheroidal_jacobian_check: need s1 > 1");
    static thread_local std::vector<double> sx, sw, tx, tw;
    if (sx.size() != 40) {
        gauss_legendre(40, sx, sw);
        gauss_legendre(40, tx, tw);
    }
    const double L3 = focal_half * focal_half * focal_half;
    double acc = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double s = 0.5 * (s1 - 1.0) * sx[i] + 0.5 * (s1 + 1.0);
        double inner = 0.0;
        for (int j = 0; j < 40; ++j)
            inner += tw[j] * (s * s - tx[j] * tx[j]);
        acc += sw[i] * inner * 0.5 * (s1 - 1.0);
    }
    const double quad = acc * 2.0 * M_PI * L3;
    const double closed = 4.0 * M_PI / 3.0 * L3 * s1 * (s1 * s1 - 1.0);
    return std::fabs(quad - closed) / closed;
}

void EstimateReport::to_csv(std::ostream& os, const std::string& hash) const {
    CsvWriter w(os, {"kappa", "eta", "measured", "bound_or_fit"}, hash);
    for (const auto& r : rows) w.row({r.kappa, r.eta, r.measured, r.bound_or_fit});
}

void EstimateReport::summary(std::ostream& os) const {
    os << "rows=" << rows.size() << " fitted_exponent=" << fitted_exponent
       << " fitted_constant=" << fitted_constant
       << " verdict=" << (verdict ? "pass" : "fail") << "\n"
       << note << "\n";
}

}  // namespace scatter
