#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scatter/radon.hpp"

using namespace scatter;

namespace {

scatter::Potential smoothed_ball_indicator(const scatter::BallDomain& d) {
    // indicator of the unit-ball slice, mollified over one cell at the edge
    const double h = d.spacing;
    const double edge = d.radius_a - 1.5 * h;
    return potential_from_function(
        d,
        [edge, h](const Vec3& p) {
            const double r = p.norm();
            if (r <= edge - h) return 1.0;
            if (r >= edge) return 0.0;
            const double t = (edge - r) / h;  // ramp over one cell
            return t * t * (3.0 - 2.0 * t);
        },
        1, "ball-indicator", 0.0);
}

}  // namespace

TEST_CASE("profile of the ball indicator") {
    BallDomain d = make_grid(1.0, 33);
    Potential ind = smoothed_ball_indicator(d);
    const double redge = d.radius_a - 1.5 * d.spacing - 0.5 * d.spacing;
    const Vec3 beta = Vec3{0.2, 0.5, 0.9}.normalized();
    RadonProfile prof = radon_transform(ind, beta, 66);

    // central slice area ~ pi * r_edge^2
    std::size_t mid = 0;
    for (std::size_t i = 0; i < prof.lambdas.size(); ++i)
        if (std::fabs(prof.lambdas[i]) < std::fabs(prof.lambdas[mid])) mid = i;
    const double expect = M_PI * redge * redge;
    CHECK(std::fabs(prof.values[mid] - expect) / expect < 0.02);

    // empty slices beyond the support
    for (std::size_t i = 0; i < prof.lambdas.size(); ++i)
        if (std::fabs(prof.lambdas[i]) >= 1.0) CHECK(prof.values[i] == 0.0);
}

TEST_CASE("radial profile is symmetric") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.7, 0.8);
    RadonProfile prof = radon_transform(q, Vec3{0, 0, 1}, 66);
    const std::size_t m = prof.values.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        worst = std::max(worst,
                         std::fabs(prof.values[i] - prof.values[m - 1 - i]));
    CHECK(worst < 1e-6);
}

TEST_CASE("moment and slice identities") {
    const Vec3 beta = Vec3{0.3, -0.2, 1.0}.normalized();
    double e17[2], e18[2];
    int gi = 0;
    for (int n : {33, 66}) {
        BallDomain d = make_grid(1.0, n);
        Potential q = bump_potential(d, 0.1, 0.8);
        e17[gi] = moment_identity_check(q, beta);
        e18[gi] = slice_identity_check(q, beta, 5.0);
        ++gi;
    }
    CHECK(e17[0] < 1e-2);
    CHECK(e18[0] < 1e-2);
    // refinement shrinks both
    CHECK(e17[1] < e17[0]);
    CHECK(e18[1] < e18[0]);

    // k = 0 slice reduces to the moment identity
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.1, 0.8);
    CHECK(std::fabs(slice_identity_check(q, beta, 0.0) -
                    moment_identity_check(q, beta)) < 1e-12);

    Potential zero = potential_from_function(
        d, [](const Vec3&) { return 0.0; }, 8, "zero", 0.0);
    CHECK(moment_identity_check(zero, beta) == 0.0);
}

TEST_CASE("antipodal symmetry") {
    BallDomain d = make_grid(1.0, 33);
    DirectionSet dirs = fibonacci_sphere(16);

    Potential q = bump_potential(d, 0.7, 0.8);
    CHECK(antipodal_identity_check(q, dirs) < 1e-10);

    Potential shifted = potential_from_function(
        d,
        [](const Vec3& p) {
            const double r2 = 0.55 * 0.55;
            const double d2 = (p - Vec3{0.15, -0.1, 0.0}).norm2();
            return d2 < r2 ? 0.1 * std::exp(-r2 / (r2 - d2)) : 0.0;
        },
        8, "shifted-bump", 0.0);
    CHECK(antipodal_identity_check(shifted, dirs) < 1e-6);
}

TEST_CASE("transform is linear") {
    BallDomain d = make_grid(1.0, 17);
    Potential f = bump_potential(d, 0.5, 0.7);
    Potential g = piecewise_smooth_potential(d, 0.3, 0.6, 4);
    Potential mix = potential_from_function(
        d,
        [&](const Vec3& p) { return 2.0 * f.evaluate(p) - 3.0 * g.evaluate(p); },
        4, "mix", 0.0);
    const Vec3 beta = Vec3{1.0, 0.4, -0.2}.normalized();
    RadonProfile pf = radon_transform(f, beta, 34);
    RadonProfile pg = radon_transform(g, beta, 34);
    RadonProfile pm = radon_transform(mix, beta, 34);
    double worst = 0.0;
    for (std::size_t i = 0; i < pm.values.size(); ++i)
        worst = std::max(worst, std::fabs(pm.values[i] - 2.0 * pf.values[i] +
                                          3.0 * pg.values[i]));
    CHECK(worst < 1e-12);

    CHECK_THROWS_AS(radon_transform(f, beta, 8), InvalidArgumentError);
}
