#include "scatter/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <iostream>
#include <ostream>

#include "scatter/csv.hpp"
#include "scatter/parallel.hpp"

namespace scatter {

ComplexField apply_T(const ComplexField& eps, const Potential& q,
                     const KernelParams& params) {
    if (!(eps.domain == q.domain))
        throw InvalidArgumentError("apply_T: field/potential grids differ");
    ComplexField src(eps.domain);
    for (std::size_t m = 0; m < src.values.size(); ++m)
        src.values[m] = q.values[m] * eps.values[m];
    return convolve_green(src, params);
}

ScatteringSolution solve_eps(const Potential& q, const Vec3& alpha, cdouble k,
                             double tol, int max_iter) {
    if (tol <= 0.0) throw InvalidArgumentError("solve_eps: tol must be positive");
    const KernelParams params(k, alpha);
    const BallDomain& d = q.domain;

    ScatteringSolution sol;
    sol.alpha = alpha;
    sol.k = k;

    ComplexField ones(d, cdouble{1.0, 0.0});
    ComplexField free_term = apply_T(ones, q, params);  // = T 1
    for (auto& v : free_term.values) v = -v;            // free term of the eps equation

    ComplexField eps = free_term;
    ComplexField term = free_term;
    double norm1 = sup_norm(term.values);  // one application back
    double norm2 = norm1;                  // two applications back
    int growth_streak = 0;
    int it = 0;
    if (norm1 < tol) sol.converged = true;  // free case: nothing to iterate
    for (; !sol.converged && it < max_iter;) {
        ++it;
        ComplexField next = apply_T(term, q, params);
        for (auto& v : next.values) v = -v;
        term = std::move(next);
        const double tn = sup_norm(term.values);
        for (std::size_t m = 0; m < eps.values.size(); ++m)
            eps.values[m] += term.values[m];
        if (tn < tol) {
            sol.converged = true;
            break;
        }
        // the iterated operator is the contracting one: judge growth across
        // two applications, not single steps
        if (it >= 2) {
            if (tn > norm2) ++growth_streak;
            else growth_streak = 0;
            if (growth_streak >= max_iter / 2)
                throw DivergenceError(
                    "solve_eps: term norms grew for max_iter/2 consecutive "
                    "steps; raise k or shrink the potential");
        }
        norm2 = norm1;
        norm1 = tn;
    }
    sol.iterations = it;

    // residual of eps = -T1 - T eps in the sup norm
    ComplexField teps = apply_T(eps, q, params);
    double resid = 0.0;
    for (std::size_t m = 0; m < eps.values.size(); ++m)
        resid = std::max(resid, std::abs(eps.values[m] - free_term.values[m] +
                                         teps.values[m]));
    sol.residual = resid;

    sol.eps = std::move(eps);
    sol.v = ComplexField(d);
    sol.u = ComplexField(d);
    const int n = d.grid_n;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk, ++idx) {
                sol.v.values[idx] = 1.0 + sol.eps.values[idx];
                const cdouble ph =
                    std::exp(cdouble(0.0, 1.0) * k * alpha.dot(d.node(i, j, kk)));
                sol.u.values[idx] = ph * sol.v.values[idx];
            }
    return sol;
}

cdouble scattering_amplitude(const Potential& q, const ScatteringSolution& sol,
                             const Vec3& beta) {
    if (!sol.converged)
        std::cerr << "[scatter] warning: amplitude from a non-converged solve "
                     "(residual "
                  << sol.residual << ")\n";
    const BallDomain& d = q.domain;
    const int n = d.grid_n;
    ComplexField f(d);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk, ++idx) {
                const double qv = q.values[idx];
                if (qv == 0.0) continue;
                const cdouble ph = std::exp(cdouble(0.0, -1.0) * sol.k *
                                            beta.dot(d.node(i, j, kk)));
                f.values[idx] = ph * qv * sol.u.values[idx];
            }
    return -ball_quadrature(f) / (4.0 * M_PI);
}

AmplitudeTable fixed_direction_dataset(const Potential& q, const Vec3& alpha0,
                                       const DirectionSet& betas,
                                       const std::vector<double>& ks, double tol) {
    for (double k : ks)
        if (k <= 0.0)
            throw InvalidArgumentError("fixed_direction_dataset: need k > 0");
    AmplitudeTable table;
    table.entries.resize(betas.size() * ks.size());
    std::vector<ScatteringSolution> sols(ks.size());
    parallel_for(ks.size(), [&](std::size_t ik) {
        sols[ik] = solve_eps(q, alpha0, ks[ik], tol);
    });
    for (std::size_t ik = 0; ik < ks.size(); ++ik) {
        parallel_for(betas.size(), [&](std::size_t ib) {
            AmplitudeEntry& e = table.entries[ik * betas.size() + ib];
            e.beta = betas.directions[ib];
            e.alpha = alpha0;
            e.k = ks[ik];
            e.A = scattering_amplitude(q, sols[ik], e.beta);
        });
    }
    return table;
}

ComplexField solve_eps_dense(const Potential& q, const Vec3& alpha, cdouble k) {
    const BallDomain& d = q.domain;
    const int n = d.grid_n;
    if (n > 13)
        throw InvalidArgumentError("solve_eps_dense: oracle limited to n <= 13");
    const KernelParams params(k, alpha);
    const std::size_t N = d.num_nodes();
    const double h3 = d.spacing * d.spacing * d.spacing;

    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(N, N);
    Eigen::VectorXcd rhs(N);
    std::vector<Vec3> nodes(N);
    {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int kk = 0; kk < n; ++kk, ++idx) nodes[idx] = d.node(i, j, kk);
    }
    for (std::size_t row = 0; row < N; ++row) {
        cdouble free_acc{};
        for (std::size_t col = 0; col < N; ++col) {
            const double qv = q.values[col];
            if (qv == 0.0) continue;
            cdouble g;
            if (row == col)
                g = cdouble(self_node_weight(d.spacing), 0.0);
            else
                g = factored_green(nodes[row] - nodes[col], params);
            const cdouble w = g * qv * h3;
            A(row, col) += w;
            free_acc += w;
        }
        rhs(row) = -free_acc;  // -T1
    }
    Eigen::VectorXcd x = A.partialPivLu().solve(rhs);
    ComplexField eps(d);
    for (std::size_t m = 0; m < N; ++m) eps.values[m] = x(m);
    return eps;
}

void AmplitudeTable::to_csv(std::ostream& os, const std::string& hash) const {
    CsvWriter w(os,
                {"beta_x", "beta_y", "beta_z", "alpha_x", "alpha_y", "alpha_z",
                 "re_k", "im_k", "re_A", "im_A"},
                hash);
    for (const auto& e : entries)
        w.row({e.beta.x, e.beta.y, e.beta.z, e.alpha.x, e.alpha.y, e.alpha.z,
               e.k.real(), e.k.imag(), e.A.real(), e.A.imag()});
}

}  // namespace scatter
