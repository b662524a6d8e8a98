#include "scatter/radon.hpp"

#include "scatter/csv.hpp"
#include <cmath>
#include <ostream>

#include "scatter/interp.hpp"
#include "scatter/parallel.hpp"

namespace scatter {

void plane_frame(const Vec3& beta, Vec3& e1, Vec3& e2) {
    // axis least aligned with beta; |beta| components make the pick even in beta
    const double ax = std::fabs(beta.x), ay = std::fabs(beta.y),
                 az = std::fabs(beta.z);
    Vec3 seed{1.0, 0.0, 0.0};
    if (ay <= ax && ay <= az) seed = {0.0, 1.0, 0.0};
    else if (az <= ax && az <= ay) seed = {0.0, 0.0, 1.0};
    e1 = beta.cross(seed).normalized();
    e2 = beta.cross(e1);
}

RadonProfile radon_transform(const Potential& f, const Vec3& beta, int m) {
    if (m < 16)
        throw InvalidArgumentError("radon_transform: need m >= 16 offsets");
    if (!is_unit(beta, 1e-10))
        throw InvalidArgumentError("radon_transform: beta must be unit");
    const BallDomain& d = f.domain;
    const double a = d.radius_a;
    const double h = d.spacing;

    RadonProfile prof;
    prof.beta = beta;
    prof.lambdas.resize(m);
    prof.values.assign(m, 0.0);
    for (int i = 0; i < m; ++i)
        prof.lambdas[i] = -a + 2.0 * a * i / (m - 1);

    Vec3 e1, e2;
    plane_frame(beta, e1, e2);
    // symmetric in-plane lattice with spacing h; s -> -s symmetry makes the
    // antipodal profile an exact permutation of the same samples
    const int half = static_cast<int>(std::ceil(a / h));
    const RealField field = f.field();

    parallel_for(static_cast<std::size_t>(m), [&](std::size_t mi) {
        const double lam = prof.lambdas[mi];
        const double rad2 = a * a - lam * lam;
        if (rad2 <= 0.0) return;
        const Vec3 base = lam * beta;
        double acc = 0.0;
        for (int is = -half; is <= half; ++is) {
            const double s = is * h;
            for (int it = -half; it <= half; ++it) {
                const double t = it * h;
                if (s * s + t * t > rad2) continue;
                acc += sample_tricubic(field, base + s * e1 + t * e2);
            }
        }
        prof.values[mi] = acc * h * h;
    });
    return prof;
}

namespace {

// trapezoid over the uniform lambda samples
template <typename Weight>
auto profile_integral(const RadonProfile& p, Weight&& w) {
    const double dl = p.lambdas[1] - p.lambdas[0];
    using R = decltype(w(0.0) * 1.0);
    R acc{};
    for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
        const double tw = (i == 0 || i + 1 == p.lambdas.size()) ? 0.5 : 1.0;
        acc += tw * w(p.lambdas[i]) * p.values[i];
    }
    return acc * dl;
}

}  // namespace

double moment_identity_check(const Potential& f, const Vec3& beta) {
    const double lhs = ball_quadrature(f.field());
    RadonProfile prof = radon_transform(f, beta, 2 * f.domain.grid_n);
    const double rhs = profile_integral(prof, [](double) { return 1.0; });
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    return scale > 0.0 ? std::fabs(lhs - rhs) / scale : 0.0;
}

double slice_identity_check(const Potential& f, const Vec3& beta, double k) {
    const BallDomain& d = f.domain;
    ComplexField g(d);
    const int n = d.grid_n;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk, ++idx) {
                const double ph = k * beta.dot(d.node(i, j, kk));
                g.values[idx] = f.values[idx] * cdouble(std::cos(ph), std::sin(ph));
            }
    const cdouble lhs = ball_quadrature(g);
    RadonProfile prof = radon_transform(f, beta, 2 * n);
    const cdouble rhs = profile_integral(
        prof, [k](double lam) { return std::exp(cdouble(0.0, k * lam)); });
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

double antipodal_identity_check(const Potential& f, const DirectionSet& betas) {
    double worst = 0.0;
    const int m = 2 * f.domain.grid_n;
    for (const Vec3& b : betas.directions) {
        RadonProfile plus = radon_transform(f, b, m);
        RadonProfile minus = radon_transform(f, -b, m);
        const std::size_t s = plus.values.size();
        for (std::size_t i = 0; i < s; ++i)
            worst = std::max(
                worst, std::fabs(plus.values[i] - minus.values[s - 1 - i]));
    }
    return worst;
}

void RadonProfile::to_csv(std::ostream& os) const {
    os << "lambda,value\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        os << format_double(lambdas[i]) << "," << format_double(values[i])
           << "\n";
}

}  // namespace scatter
