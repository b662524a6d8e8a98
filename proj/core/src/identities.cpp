#include "scatter/identities.hpp"

#include <cmath>
#include <sstream>

#include "scatter/solver.hpp"

namespace scatter {

IdentityReport make_identity_report(cdouble lhs, cdouble rhs, std::string context) {
    IdentityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
    r.context = std::move(context);
    return r;
}

IdentityReport amplitude_difference_check(const Potential& q1, const Potential& q2,
                                          const Vec3& beta, const Vec3& alpha,
                                          double k, double tol) {
    const BallDomain& d = q1.domain;
    if (!(d == q2.domain))
        throw InvalidArgumentError("amplitude_difference_check: grids differ");

    ScatteringSolution s1 = solve_eps(q1, alpha, k, tol);
    ScatteringSolution s2a = solve_eps(q2, alpha, k, tol);
    const cdouble A1 = scattering_amplitude(q1, s1, beta);
    const cdouble A2 = scattering_amplitude(q2, s2a, beta);
    const cdouble lhs = -4.0 * M_PI * (A1 - A2);

    // u2 with incidence -beta for the volume side
    ScatteringSolution s2b = solve_eps(q2, -beta, k, tol);
    ComplexField f(d);
    for (std::size_t m = 0; m < f.values.size(); ++m)
        f.values[m] =
            (q1.values[m] - q2.values[m]) * s1.u.values[m] * s2b.u.values[m];
    const cdouble rhs = ball_quadrature(f);

    std::ostringstream ctx;
    ctx << "amplitude-difference, k=" << k << ", n=" << d.grid_n;
    return make_identity_report(lhs, rhs, ctx.str());
}

IdentityReport reciprocity_check(const Potential& q, const Vec3& beta,
                                 const Vec3& alpha, double k, double tol) {
    ScatteringSolution sa = solve_eps(q, alpha, k, tol);
    const cdouble fwd = scattering_amplitude(q, sa, beta);
    ScatteringSolution sb = solve_eps(q, -beta, k, tol);
    const cdouble rev = scattering_amplitude(q, sb, -alpha);
    std::ostringstream ctx;
    ctx << "reciprocity, k=" << k;
    return make_identity_report(fwd, rev, ctx.str());
}

IdentityReport orthogonality_relation_check(const Potential& q1, const Potential& q2,
                                            const Vec3& alpha0, const Vec3& beta,
                                            double k, double tol) {
    const double tau = (alpha0 - beta).norm();
    if (tau == 0.0)
        throw InvalidArgumentError(
            "orthogonality_relation_check: beta == alpha0 is degenerate");
    const Vec3 zeta = (alpha0 - beta) / tau;
    const double kappa = tau * k;

    const BallDomain& d = q1.domain;
    ScatteringSolution s1 = solve_eps(q1, alpha0, k, tol);
    ScatteringSolution s2 = solve_eps(q2, -beta, k, tol);

    ComplexField direct(d), rewritten(d);
    const int n = d.grid_n;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk, ++idx) {
                const double pv = q1.values[idx] - q2.values[idx];
                if (pv == 0.0) continue;
                direct.values[idx] = pv * s1.u.values[idx] * s2.u.values[idx];
                const cdouble e1 = s1.eps.values[idx];
                const cdouble e2 = s2.eps.values[idx];
                const cdouble eps12 = e1 + e2 + e1 * e2;
                const cdouble ph = std::exp(
                    cdouble(0.0, kappa * zeta.dot(d.node(i, j, kk))));
                rewritten.values[idx] = ph * (1.0 + eps12) * pv;
            }
    const cdouble lhs = ball_quadrature(direct);
    const cdouble rhs = ball_quadrature(rewritten);
    std::ostringstream ctx;
    ctx << "orthogonality rewrite, k=" << k << ", tau=" << tau
        << ", kappa=" << kappa;
    return make_identity_report(lhs, rhs, ctx.str());
}

}  // namespace scatter
