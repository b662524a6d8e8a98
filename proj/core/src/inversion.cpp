#include "scatter/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "scatter/spectral.hpp"

namespace scatter {

std::vector<FourierSample> data_to_fourier_samples(const AmplitudeTable& table,
                                                   const Vec3& alpha0) {
    std::vector<FourierSample> out;
    out.reserve(table.entries.size());
    for (const auto& e : table.entries) {
        FourierSample s;
        s.xi = (alpha0 - e.beta) * e.k.real();
        s.qtilde = -4.0 * M_PI * e.A;
        out.push_back(s);
    }
    return out;
}

ReconstructionResult reconstruct(const std::vector<FourierSample>& samples,
                                 const BallDomain& domain, FillMode fill,
                                 int padding, const Potential* ground_truth) {
    if (samples.empty())
        throw InvalidArgumentError("reconstruct: no samples");
    const int n = domain.grid_n;
    const int N = padding * n;
    const double h = domain.spacing;
    const double dxi = 2.0 * M_PI / (N * h);
    const std::size_t NN = static_cast<std::size_t>(N) * N * N;

    std::vector<cdouble> acc(NN, cdouble{});
    std::vector<double> cnt(NN, 0.0);
    auto bin = [&](const Vec3& xi, cdouble val) {
        const long mi = std::lround(xi.x / dxi);
        const long mj = std::lround(xi.y / dxi);
        const long mk = std::lround(xi.z / dxi);
        const long lim = N / 2 - 1;
        if (std::labs(mi) > lim || std::labs(mj) > lim || std::labs(mk) > lim)
            return;
        const std::size_t i = static_cast<std::size_t>((mi + N) % N);
        const std::size_t j = static_cast<std::size_t>((mj + N) % N);
        const std::size_t k = static_cast<std::size_t>((mk + N) % N);
        const std::size_t idx = (i * N + j) * N + k;
        acc[idx] += val;
        cnt[idx] += 1.0;
    };
    for (const auto& s : samples) {
        bin(s.xi, s.qtilde);
        bin(-s.xi, std::conj(s.qtilde));  // reality of q
    }

    SpectralField dual;
    dual.n_dual = N;
    dual.spacing = h;
    dual.origin = -domain.radius_a;
    dual.values.assign(NN, cdouble{});
    std::size_t filled = 0;
    for (std::size_t m = 0; m < NN; ++m)
        if (cnt[m] > 0.0) {
            dual.values[m] = acc[m] / cnt[m];
            ++filled;
        }

    ReconstructionResult res;
    res.coverage_map = static_cast<double>(filled) / NN;
    res.low_coverage_warning = res.coverage_map < 0.5;
    if (res.low_coverage_warning)
        std::cerr << "[scatter] warning: " << (1.0 - res.coverage_map) * 100.0
                  << "% of dual bins are empty\n";

    if (fill == FillMode::radial) {
        // shell-averaged real profile of the filled bins, interpolated onto
        // the unreached nodes inside the sampled radius
        double r_reached = 0.0;
        std::size_t idx = 0;
        const double half_bin = 0.5 * dxi;
        std::vector<double> prof_sum, prof_cnt;
        const std::size_t nbins =
            static_cast<std::size_t>(std::ceil(std::sqrt(3.0) * M_PI / h /
                                               half_bin)) + 2;
        prof_sum.assign(nbins, 0.0);
        prof_cnt.assign(nbins, 0.0);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k, ++idx)
                    if (cnt[idx] > 0.0) {
                        const double r = dual.xi(i, j, k).norm();
                        r_reached = std::max(r_reached, r);
                        const std::size_t bi = std::min(
                            nbins - 1, static_cast<std::size_t>(r / half_bin));
                        prof_sum[bi] += dual.values[idx].real();
                        prof_cnt[bi] += 1.0;
                    }
        // compact the occupied bins, then linearly interpolate
        std::vector<double> rs, vs;
        for (std::size_t b = 0; b < nbins; ++b)
            if (prof_cnt[b] > 0.0) {
                rs.push_back((b + 0.5) * half_bin);
                vs.push_back(prof_sum[b] / prof_cnt[b]);
            }
        auto radial_value = [&](double r) -> double {
            if (rs.empty() || r > r_reached) return 0.0;
            auto it = std::lower_bound(rs.begin(), rs.end(), r);
            if (it == rs.begin()) return vs.front();
            if (it == rs.end()) return vs.back();
            const std::size_t hi = it - rs.begin();
            const double t = (r - rs[hi - 1]) / (rs[hi] - rs[hi - 1]);
            return (1.0 - t) * vs[hi - 1] + t * vs[hi];
        };
        idx = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k, ++idx)
                    if (cnt[idx] == 0.0)
                        dual.values[idx] = radial_value(dual.xi(i, j, k).norm());
    }

    ComplexField rec = inverse_ft(dual, domain);
    double max_re = 0.0, max_im = 0.0;
    for (const auto& v : rec.values) {
        max_re = std::max(max_re, std::fabs(v.real()));
        max_im = std::max(max_im, std::fabs(v.imag()));
    }
    res.imag_residual = max_re > 0.0 ? max_im / max_re : 0.0;
    Potential qr;
    qr.domain = domain;
    qr.smoothness_ell = 0;
    qr.label = "reconstruction";
    qr.values.resize(domain.num_nodes());
    const double a = domain.radius_a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const std::size_t m = domain.index(i, j, k);
                qr.values[m] = domain.node(i, j, k).norm() <= a
                                   ? rec.values[m].real()
                                   : 0.0;
            }
    res.q_rec = std::move(qr);

    if (ground_truth) {
        double num = 0.0, den = 0.0;
        for (std::size_t m = 0; m < res.q_rec.values.size(); ++m) {
            const double dv = res.q_rec.values[m] - ground_truth->values[m];
            num += dv * dv;
            den += ground_truth->values[m] * ground_truth->values[m];
        }
        res.rel_l2_error = den > 0.0 ? std::sqrt(num / den) : 0.0;
    } else {
        res.rel_l2_error = std::nan("");
    }
    return res;
}

AmplitudeTable exact_born_dataset(const Potential& q, const Vec3& alpha0,
                                  const DirectionSet& betas,
                                  const std::vector<double>& ks) {
    if (!q.evaluate)
        throw InvalidArgumentError(
            "exact_born_dataset: needs an analytic potential family");
    // dense radial table of q~(|xi|) = 4pi/|xi| int sin(|xi| r) q(r) r dr
    double kmax = 0.0;
    for (double k : ks) kmax = std::max(kmax, k);
    const double xi_max = 2.0 * kmax + 1.0;
    const double support = q.support_r > 0.0 ? q.support_r : q.domain.radius_a;
    const int nr = 3000, nxi = 5000;
    std::vector<double> qt(nxi);
    const double dr = support / nr;
    for (int m = 0; m < nxi; ++m) {
        const double xi = xi_max * m / (nxi - 1);
        double acc = 0.0;
        for (int i = 0; i < nr; ++i) {
            const double r = (i + 0.5) * dr;
            const double qv = q.evaluate(Vec3{r, 0.0, 0.0});
            acc += (xi < 1e-9 ? r * r : std::sin(xi * r) * r / xi) * qv;
        }
        qt[m] = 4.0 * M_PI * acc * dr;
    }
    auto qtilde = [&](double xi) {
        const double t = xi / xi_max * (nxi - 1);
        const std::size_t i = std::min<std::size_t>(nxi - 2,
                                                    static_cast<std::size_t>(t));
        const double f = t - i;
        return (1.0 - f) * qt[i] + f * qt[i + 1];
    };

    AmplitudeTable table;
    table.entries.reserve(betas.size() * ks.size());
    for (double k : ks)
        for (const Vec3& b : betas.directions) {
            AmplitudeEntry e;
            e.beta = b;
            e.alpha = alpha0;
            e.k = k;
            e.A = -qtilde((k * (alpha0 - b)).norm()) / (4.0 * M_PI);
            table.entries.push_back(e);
        }
    return table;
}

}  // namespace scatter
