#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "scatter/potential.hpp"
#include "scatter/spectral.hpp"
#include "test_helpers.hpp"

using namespace scatter;

TEST_CASE("smooth bump family") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 1.0, 0.8);
    CHECK(q.at(16, 16, 16) == doctest::Approx(std::exp(-1.0)));
    CHECK(q.smoothness_ell > 3);

    // value vanishes at and beyond the support radius
    for (int i = 0; i < 33; ++i)
        for (int j = 0; j < 33; ++j)
            for (int k = 0; k < 33; ++k)
                if (d.node(i, j, k).norm() >= 0.8) CHECK(q.at(i, j, k) == 0.0);

    Potential neg = bump_potential(d, -2.0, 0.8);
    for (double v : neg.values) {
        CHECK(v <= 0.0);
        CHECK(v >= -2.0 * std::exp(-1.0));
    }

    CHECK_THROWS_AS(bump_potential(d, 1.0, 1.0), InvalidArgumentError);
    // support touching the margin band also rejected
    CHECK_THROWS_AS(bump_potential(d, 1.0, 0.99), InvalidArgumentError);
}

TEST_CASE("finite-order family") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = piecewise_smooth_potential(d, 0.7, 0.8, 4);
    CHECK(q.at(16, 16, 16) == doctest::Approx(0.7));
    CHECK(q.smoothness_ell == 4);
    CHECK(q.evaluate(Vec3{0.8, 0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(piecewise_smooth_potential(d, 1.0, 0.8, 3),
                    InvalidArgumentError);
}

TEST_CASE("finite-order L2 norm against radial oracle") {
    // support_r = 1 needs a wider box
    BallDomain d = make_grid(1.2, 33);
    Potential q = piecewise_smooth_potential(d, 1.0, 1.0, 4);
    RealField q2(d);
    for (std::size_t m = 0; m < q.values.size(); ++m)
        q2.values[m] = q.values[m] * q.values[m];
    const double grid_l2 = std::sqrt(ball_quadrature(q2));
    const double oracle = std::sqrt(
        4.0 * M_PI * simpson_adaptive(
                         [](double r) {
                             const double t = 1.0 - r * r;
                             return std::pow(t, 8) * r * r;
                         },
                         0.0, 1.0));
    CHECK(std::fabs(grid_l2 - oracle) / oracle < 2e-3);
}

TEST_CASE("direct fourier transform") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.5, 0.8);

    const cdouble at0 = fourier_of_potential(q, Vec3{0, 0, 0});
    CHECK(std::fabs(at0.imag()) < 1e-14);
    CHECK(at0.real() == doctest::Approx(ball_quadrature(q.field())));

    const Vec3 xi{2.3, -1.1, 0.7};
    const cdouble plus = fourier_of_potential(q, xi);
    const cdouble minus = fourier_of_potential(q, -xi);
    CHECK(std::abs(minus - std::conj(plus)) < 1e-10);

    // radial families: equal-norm arguments agree
    const cdouble r1 = fourier_of_potential(q, Vec3{3.0, 0.0, 0.0});
    const cdouble r2 = fourier_of_potential(q, Vec3{0.0, 3.0, 0.0});
    const cdouble r3 =
        fourier_of_potential(q, Vec3{3.0, 0.0, 0.0} * (1.0 / std::sqrt(2.0)) +
                                     Vec3{0.0, 0.0, 3.0} * (1.0 / std::sqrt(2.0)));
    CHECK(std::abs(r1 - r2) < 1e-3 * std::abs(at0));
    CHECK(std::abs(r1 - r3) < 1e-3 * std::abs(at0));
}

TEST_CASE("direct transform agrees with padded DFT at a dual node") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.5, 0.8);
    SpectralField s = forward_ft(q, 2);
    // dual node near |xi| = 5
    const int m = static_cast<int>(std::lround(5.0 / s.freq_spacing()));
    const Vec3 xi = s.xi(m, 0, 0);
    const cdouble direct = fourier_of_potential(q, xi);
    const cdouble dft = s.at(m, 0, 0);
    CHECK(std::abs(direct - dft) / std::abs(direct) < 1e-2);
}

TEST_CASE("binary round trip") {
    BallDomain d = make_grid(1.0, 17);
    Potential q = piecewise_smooth_potential(d, 0.3, 0.7, 5);
    const std::string path = "/tmp/scatter_potential_test.bin";
    save_potential(q, path);
    Potential r = load_potential(path);
    std::remove(path.c_str());
    CHECK(r.domain.grid_n == q.domain.grid_n);
    CHECK(r.domain.radius_a == q.domain.radius_a);
    CHECK(r.smoothness_ell == q.smoothness_ell);
    CHECK(r.support_r == q.support_r);
    CHECK(r.label == q.label);
    REQUIRE(r.values.size() == q.values.size());
    for (std::size_t i = 0; i < q.values.size(); ++i)
        CHECK(r.values[i] == q.values[i]);
}
