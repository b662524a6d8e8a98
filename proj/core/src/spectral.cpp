#include "scatter/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "scatter/csv.hpp"
#include "scatter/fft3.hpp"
#include "scatter/green.hpp"
#include "scatter/radon.hpp"
#include "scatter/solver.hpp"

namespace scatter {

namespace {

SpectralField dft_with_origin(std::vector<cdouble> big, int N, double h,
                              double origin) {
    fft3(big, N, +1);
    SpectralField s;
    s.n_dual = N;
    s.spacing = h;
    s.origin = origin;
    s.values = std::move(big);
    const double h3 = h * h * h;
    std::vector<cdouble> phase(N);
    for (int m = 0; m < N; ++m) {
        const double xi = s.xi1(m);
        phase[m] = std::exp(cdouble(0.0, xi * origin));
    }
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const cdouble pij = phase[i] * phase[j] * h3;
            for (int k = 0; k < N; ++k, ++idx) s.values[idx] *= pij * phase[k];
        }
    return s;
}

}  // namespace

SpectralField forward_ft(const ComplexField& f, int padding) {
    if (padding < 1) throw InvalidArgumentError("forward_ft: padding >= 1");
    const int n = f.domain.grid_n;
    const int N = padding * n;
    std::vector<cdouble> big(static_cast<std::size_t>(N) * N * N, cdouble{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                big[(static_cast<std::size_t>(i) * N + j) * N + k] =
                    f.values[f.domain.index(i, j, k)];
    return dft_with_origin(std::move(big), N, f.domain.spacing,
                           -f.domain.radius_a);
}

SpectralField forward_ft(const RealField& f, int padding) {
    ComplexField c(f.domain);
    for (std::size_t i = 0; i < f.values.size(); ++i) c.values[i] = f.values[i];
    return forward_ft(c, padding);
}

SpectralField forward_ft_whole(const ComplexField& f) {
    return dft_with_origin(f.values, f.domain.grid_n, f.domain.spacing,
                           -f.domain.radius_a);
}

ComplexField inverse_ft(const SpectralField& s, const BallDomain& target) {
    const int N = s.n_dual;
    const double h = s.spacing;
    std::vector<cdouble> big(s.values.size());
    std::vector<cdouble> phase(N);
    for (int m = 0; m < N; ++m)
        phase[m] = std::exp(cdouble(0.0, -s.xi1(m) * s.origin));
    const double inv_h3 = 1.0 / (h * h * h);
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const cdouble pij = phase[i] * phase[j] * inv_h3;
            for (int k = 0; k < N; ++k, ++idx)
                big[idx] = s.values[idx] * pij * phase[k];
        }
    fft3(big, N, -1);
    const double invN3 = 1.0 / static_cast<double>(big.size());
    ComplexField out(target);
    const int n = target.grid_n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.at(i, j, k) =
                    big[(static_cast<std::size_t>(i) * N + j) * N + k] * invN3;
    return out;
}

void spectral_slice_csv(const SpectralField& s, int k_index, std::ostream& os,
                        const std::string& hash) {
    if (k_index < 0 || k_index >= s.n_dual)
        throw InvalidArgumentError("spectral_slice_csv: slice index out of range");
    CsvWriter w(os, {"xi1", "xi2", "re", "im"}, hash);
    for (int i = 0; i < s.n_dual; ++i)
        for (int j = 0; j < s.n_dual; ++j) {
            const cdouble v = s.at(i, j, k_index);
            w.row({s.xi1(i), s.xi1(j), v.real(), v.imag()});
        }
}

double parseval_check(const ComplexField& f, int padding) {
    const double h = f.domain.spacing;
    double space = 0.0;
    for (const auto& v : f.values) space += std::norm(v);
    space *= h * h * h;
    SpectralField s = forward_ft(f, padding);
    double dual = 0.0;
    for (const auto& v : s.values) dual += std::norm(v);
    const double dxi = s.freq_spacing();
    dual *= dxi * dxi * dxi / std::pow(2.0 * M_PI, 3);
    return std::abs(space - dual) / space;
}

double convolution_check(const RealField& f, const RealField& g, int padding) {
    if (!(f.domain == g.domain))
        throw InvalidArgumentError("convolution_check: domains differ");
    const int n = f.domain.grid_n;
    const double h = f.domain.spacing;
    const int N = padding * n;
    if (N < 2 * n - 1)
        throw InvalidArgumentError("convolution_check: padding too small");

    // direct padded sum; support of f*g lives on [-2a, 2a]^3
    std::vector<cdouble> conv(static_cast<std::size_t>(N) * N * N, cdouble{});
    const double h3 = h * h * h;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double fv = f.at(i, j, k);
                if (fv == 0.0) continue;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        const std::size_t dst0 =
                            (static_cast<std::size_t>(i + p) * N + (j + q)) * N + k;
                        const std::size_t src0 = g.domain.index(p, q, 0);
                        for (int r = 0; r < n; ++r)
                            conv[dst0 + r] += fv * g.values[src0 + r] * h3;
                    }
            }
    SpectralField lhs =
        dft_with_origin(std::move(conv), N, h, -2.0 * f.domain.radius_a);
    SpectralField ft = forward_ft(f, padding);
    SpectralField gt = forward_ft(g, padding);

    double peak = 0.0;
    for (std::size_t m = 0; m < ft.values.size(); ++m)
        peak = std::max(peak, std::abs(ft.values[m] * gt.values[m]));
    double worst = 0.0;
    for (std::size_t m = 0; m < ft.values.size(); ++m) {
        const cdouble prod = ft.values[m] * gt.values[m];
        if (std::abs(prod) < 1e-6 * peak) continue;
        worst = std::max(worst, std::abs(lhs.values[m] - prod) / std::abs(prod));
    }
    return worst;
}

TwoPathTransform complex_freq_transform_paths(const Potential& p, const Vec3& beta,
                                              double kappa, double eta) {
    if (eta < 0.0)
        throw InvalidArgumentError("complex_freq_transform: eta must be >= 0");
    if (eta * p.domain.radius_a > 700.0)
        throw OverflowGuardError("complex_freq_transform: eta*a exceeds 700");

    const BallDomain& d = p.domain;
    const int n = d.grid_n;

    // direct 3-D quadrature of p e^{(i kappa - eta) beta.x}
    ComplexField f(d);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++idx) {
                const double pv = p.values[idx];
                if (pv == 0.0) continue;
                const double bx = beta.dot(d.node(i, j, k));
                f.values[idx] = pv * std::exp(cdouble(-eta * bx, kappa * bx));
            }
    const cdouble direct = ball_quadrature(f);

    // 1-D route through the plane-integral profile
    RadonProfile prof = radon_transform(p, beta, 2 * n);
    cdouble oned{};
    const double dl = prof.lambdas[1] - prof.lambdas[0];
    for (std::size_t m = 0; m < prof.lambdas.size(); ++m) {
        const double w =
            (m == 0 || m + 1 == prof.lambdas.size()) ? 0.5 : 1.0;
        const double lam = prof.lambdas[m];
        oned += w * prof.values[m] * std::exp(cdouble(-eta * lam, kappa * lam));
    }
    oned *= dl;

    TwoPathTransform out{direct, oned, 0.0};
    const double scale = std::max(std::abs(direct), std::abs(oned));
    out.rel_diff = scale > 0.0 ? std::abs(direct - oned) / scale : 0.0;
    return out;
}

cdouble complex_freq_transform(const Potential& p, const Vec3& beta, double kappa,
                               double eta) {
    return complex_freq_transform_paths(p, beta, kappa, eta).radon_1d;
}

EpsTildeResidual eps_tilde_residual_stats(const ScatteringSolution& sol,
                                          const Potential& q, const Vec3& alpha,
                                          cdouble k, int padding, double margin) {
    const BallDomain& d = q.domain;
    const int n = d.grid_n;
    const int N = padding * n;
    const KernelParams params(k, alpha);

    ComplexField qfield(d), qeps(d);
    for (std::size_t m = 0; m < q.values.size(); ++m) {
        qfield.values[m] = q.values[m];
        qeps.values[m] = q.values[m] * sol.eps.values[m];
    }
    // extension of eps to the padded torus by its own defining operator
    ComplexField eps_big = convolve_green_cyclic(qfield, params, N);
    ComplexField teps_big = convolve_green_cyclic(qeps, params, N);
    for (std::size_t m = 0; m < eps_big.values.size(); ++m)
        eps_big.values[m] = -eps_big.values[m] - teps_big.values[m];

    SpectralField et = forward_ft_whole(eps_big);
    SpectralField qt = forward_ft(qfield, padding);
    SpectralField qet = forward_ft(qeps, padding);

    const double band = M_PI / (2.0 * d.spacing);
    std::vector<double> rel;
    rel.reserve(et.values.size() / 8);
    std::size_t skipped = 0, in_band = 0;
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int kk = 0; kk < N; ++kk, ++idx) {
                const Vec3 xi = et.xi(i, j, kk);
                if (xi.norm() > band) continue;
                ++in_band;
                const cdouble den = xi.norm2() - 2.0 * k * alpha.dot(xi);
                if (std::abs(den) < margin) {
                    ++skipped;
                    continue;
                }
                const cdouble lhs = et.values[idx];
                const cdouble rhs = -(qt.values[idx] + qet.values[idx]) / den;
                const double mag = std::abs(lhs);
                if (mag == 0.0) {
                    if (std::abs(rhs) == 0.0) rel.push_back(0.0);
                    continue;
                }
                rel.push_back(std::abs(lhs - rhs) / mag);
            }

    EpsTildeResidual out;
    out.skipped_fraction =
        in_band ? static_cast<double>(skipped) / in_band : 0.0;
    out.admissible_nodes = rel.size();
    if (!rel.empty()) {
        std::sort(rel.begin(), rel.end());
        out.median = rel[rel.size() / 2];
        out.quantile90 = rel[static_cast<std::size_t>(0.9 * (rel.size() - 1))];
    }
    return out;
}

double eps_tilde_residual(const ScatteringSolution& sol, const Potential& q,
                          const Vec3& alpha, cdouble k, int padding,
                          double margin) {
    return eps_tilde_residual_stats(sol, q, alpha, k, padding, margin).median;
}

}  // namespace scatter
