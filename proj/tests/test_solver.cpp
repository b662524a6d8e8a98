#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scatter/potential.hpp"
#include "scatter/solver.hpp"

using namespace scatter;

namespace {

Potential zero_potential(const BallDomain& d) {
    return potential_from_function(
        d, [](const Vec3&) { return 0.0; }, 8, "zero", 0.0);
}

}  // namespace

TEST_CASE("operator basics") {
    BallDomain d = make_grid(1.0, 9);
    Potential q = bump_potential(d, 0.5, 0.7);
    KernelParams p(5.0, Vec3{0, 0, 1});

    ComplexField zero(d);
    CHECK(sup_norm(apply_T(zero, q, p).values) == 0.0);

    Potential q0 = zero_potential(d);
    ComplexField ones(d, cdouble{1.0, 0.0});
    CHECK(sup_norm(apply_T(ones, q0, p).values) == 0.0);

    // linear in q
    Potential q2 = bump_potential(d, 1.0, 0.7);
    ComplexField t1 = apply_T(ones, q, p);
    ComplexField t2 = apply_T(ones, q2, p);
    double worst = 0.0;
    for (std::size_t m = 0; m < t1.values.size(); ++m)
        worst = std::max(worst, std::abs(t2.values[m] - 2.0 * t1.values[m]));
    CHECK(worst < 1e-12);
}

TEST_CASE("free case") {
    BallDomain d = make_grid(1.0, 17);
    Potential q0 = zero_potential(d);
    const Vec3 alpha{0, 0, 1};
    ScatteringSolution sol = solve_eps(q0, alpha, 5.0);
    CHECK(sol.converged);
    CHECK(sol.iterations == 0);
    CHECK(sup_norm(sol.eps.values) == 0.0);
    // u is the incident wave
    double worst = 0.0;
    for (int i = 0; i < 17; ++i)
        for (int j = 0; j < 17; ++j)
            for (int k = 0; k < 17; ++k) {
                const cdouble inc =
                    std::exp(cdouble(0, 5.0 * d.node(i, j, k).z));
                worst = std::max(worst, std::abs(sol.u.at(i, j, k) - inc));
            }
    CHECK(worst < 1e-15);
}

TEST_CASE("weak potential converges and chains hold") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.1, 0.8);
    const Vec3 alpha{0, 0, 1};
    ScatteringSolution sol = solve_eps(q, alpha, 5.0, 1e-8);
    CHECK(sol.converged);
    CHECK(sol.iterations <= 20);
    CHECK(sol.residual < 1e-7);

    // v = 1 + eps and u = e^{ik a.x} v nodewise
    double worst_v = 0.0, worst_u = 0.0;
    for (int i = 0; i < 33; ++i)
        for (int j = 0; j < 33; ++j)
            for (int k = 0; k < 33; ++k) {
                worst_v = std::max(worst_v,
                                   std::abs(sol.v.at(i, j, k) - 1.0 -
                                            sol.eps.at(i, j, k)));
                const cdouble ph =
                    std::exp(cdouble(0, 5.0 * d.node(i, j, k).z));
                worst_u = std::max(
                    worst_u, std::abs(sol.u.at(i, j, k) - ph * sol.v.at(i, j, k)));
            }
    CHECK(worst_v < 1e-12);
    CHECK(worst_u < 1e-12);
}

TEST_CASE("solution matches a refined grid at shared nodes") {
    Potential qc = bump_potential(make_grid(1.0, 33), 0.1, 0.8);
    Potential qf = bump_potential(make_grid(1.0, 65), 0.1, 0.8);
    const Vec3 alpha{0, 0, 1};
    ScatteringSolution sc = solve_eps(qc, alpha, 5.0);
    ScatteringSolution sf = solve_eps(qf, alpha, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 33; ++i)
        for (int j = 0; j < 33; ++j)
            for (int k = 0; k < 33; ++k)
                worst = std::max(worst, std::abs(sc.eps.at(i, j, k) -
                                                 sf.eps.at(2 * i, 2 * j, 2 * k)));
    CHECK(worst < 1e-3);
    CHECK(worst > 0.0);
}

TEST_CASE("iteration agrees with the dense oracle") {
    BallDomain d = make_grid(1.0, 9);
    Potential q = bump_potential(d, 0.2, 0.7);
    const Vec3 alpha{0, 0, 1};
    ScatteringSolution sol = solve_eps(q, alpha, 4.0, 1e-12);
    ComplexField dense = solve_eps_dense(q, alpha, 4.0);
    double worst = 0.0;
    for (std::size_t m = 0; m < dense.values.size(); ++m)
        worst = std::max(worst, std::abs(dense.values[m] - sol.eps.values[m]));
    CHECK(worst < 1e-10);
    CHECK_THROWS_AS(solve_eps_dense(bump_potential(make_grid(1.0, 17), 0.1, 0.8),
                                    alpha, 4.0),
                    InvalidArgumentError);
}

TEST_CASE("first-order term shrinks as k grows") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.1, 0.8);
    const Vec3 alpha{0, 0, 1};
    double prev = 1e300;
    for (double k : {5.0, 10.0, 20.0, 40.0}) {
        ScatteringSolution sol = solve_eps(q, alpha, k);
        const double e = sup_norm(sol.eps.values);
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("complex wavenumber on the matching-height curve stays convergent") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.1, 0.8);
    for (double kap : {16.0, 64.0}) {
        const cdouble k(0.5 * kap, 0.5 * std::log(kap));
        ScatteringSolution sol = solve_eps(q, Vec3{0, 0, 1}, k);
        CHECK(sol.converged);
        CHECK(sol.iterations <= 12);
    }
}

TEST_CASE("divergence outside the perturbative regime") {
    BallDomain d = make_grid(1.0, 17);
    Potential strong = bump_potential(d, -60.0, 0.8);
    CHECK_THROWS_AS(solve_eps(strong, Vec3{0, 0, 1}, 0.5, 1e-10, 40),
                    DivergenceError);
}

TEST_CASE("amplitude extraction") {
    BallDomain d = make_grid(1.0, 33);
    Potential q = bump_potential(d, 0.1, 0.8);
    Potential q0 = zero_potential(d);
    const Vec3 alpha{0, 0, 1};
    const Vec3 beta = Vec3{0.5, 0.2, 0.8}.normalized();
    const double k = 5.0;

    // zero potential: zero amplitude
    ScatteringSolution s0 = solve_eps(q0, alpha, k);
    CHECK(std::abs(scattering_amplitude(q0, s0, beta)) == 0.0);

    // first-order value against the direct transform
    const cdouble born = scattering_amplitude(q, s0, beta);
    const cdouble ref =
        -fourier_of_potential(q, (alpha - beta) * k) / (4.0 * M_PI);
    CHECK(std::abs(born - ref) < 1e-10);
}

TEST_CASE("fixed-direction dataset") {
    BallDomain d = make_grid(1.0, 25);
    const Vec3 alpha0{0, 0, 1};
    DirectionSet betas = fibonacci_sphere(8);
    std::vector<double> ks{2.0, 5.0};

    Potential q0 = zero_potential(d);
    AmplitudeTable t0 = fixed_direction_dataset(q0, alpha0, betas, ks);
    CHECK(t0.entries.size() == 16);
    for (const auto& e : t0.entries) CHECK(std::abs(e.A) == 0.0);

    CHECK_THROWS_AS(fixed_direction_dataset(q0, alpha0, betas, {0.0}),
                    InvalidArgumentError);

    // radial potential: amplitude depends on |alpha0 - beta| only
    Potential q = bump_potential(d, 0.1, 0.8);
    const double theta = 0.8;
    std::vector<Vec3> ring;
    for (double phi : {0.0, 1.3, 2.9})
        ring.push_back(Vec3{std::sin(theta) * std::cos(phi),
                            std::sin(theta) * std::sin(phi), std::cos(theta)});
    ScatteringSolution sol = solve_eps(q, alpha0, 5.0);
    const cdouble a0 = scattering_amplitude(q, sol, ring[0]);
    for (const Vec3& b : ring) {
        const cdouble av = scattering_amplitude(q, sol, b);
        CHECK(std::abs(av - a0) / std::abs(a0) < 1e-3);
    }
}

TEST_CASE("table csv format") {
    AmplitudeTable t;
    t.entries.push_back(
        {Vec3{0, 0, 1}, Vec3{1, 0, 0}, cdouble(5.0, 0.0), cdouble(0.25, -0.5)});
    std::ostringstream os;
    t.to_csv(os, "deadbeef00000000");
    const std::string out = os.str();
    CHECK(out.find("# config=deadbeef00000000") == 0);
    CHECK(out.find("beta_x,beta_y,beta_z,alpha_x,alpha_y,alpha_z,re_k,im_k,"
                   "re_A,im_A") != std::string::npos);
    CHECK(out.find("0.25,-0.5") != std::string::npos);
}
