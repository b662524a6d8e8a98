#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scatter/inversion.hpp"

using namespace scatter;

TEST_CASE("data map geometry") {
    AmplitudeTable t;
    const Vec3 alpha0{0, 0, 1};
    t.entries.push_back({alpha0, alpha0, 4.0, cdouble(0.1, 0.0)});
    t.entries.push_back({-alpha0, alpha0, 4.0, cdouble(0.2, 0.0)});
    auto samples = data_to_fourier_samples(t, alpha0);
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].xi.norm() == doctest::Approx(0.0));       // forward
    CHECK(samples[1].xi.norm() == doctest::Approx(8.0));       // back, 2k
    CHECK(samples[0].qtilde == -4.0 * M_PI * cdouble(0.1, 0.0));
}

TEST_CASE("reconstruction loop on synthetic data") {
    BallDomain d = make_grid(1.0, 33);
    const Vec3 alpha0{0, 0, 1};
    DirectionSet betas = fibonacci_sphere(200);
    std::vector<double> ks;
    for (double k = 0.5; k <= 10.001; k += 0.5) ks.push_back(k);

    CHECK_THROWS_AS(reconstruct({}, d, FillMode::zero, 2, nullptr),
                    InvalidArgumentError);

    // zero data reconstructs zero
    Potential q0 = potential_from_function(
        d, [](const Vec3&) { return 0.0; }, 8, "zero", 0.0);
    AmplitudeTable t0 = exact_born_dataset(q0, alpha0, betas, ks);
    ReconstructionResult r0 = reconstruct(data_to_fourier_samples(t0, alpha0), d,
                                          FillMode::zero, 2, &q0);
    double worst = 0.0;
    for (double v : r0.q_rec.values) worst = std::max(worst, std::fabs(v));
    CHECK(worst == 0.0);

    Potential q = bump_potential(d, 0.05, 0.8);
    AmplitudeTable data = exact_born_dataset(q, alpha0, betas, ks);
    auto samples = data_to_fourier_samples(data, alpha0);

    ReconstructionResult zr = reconstruct(samples, d, FillMode::zero, 2, &q);
    CHECK(zr.coverage_map > 0.0);
    CHECK(zr.coverage_map < 1.0);
    CHECK(zr.low_coverage_warning);  // sparse dual grid at desk scale
    CHECK(zr.rel_l2_error < 0.35);

    ReconstructionResult rr = reconstruct(samples, d, FillMode::radial, 2, &q);
    CHECK(rr.rel_l2_error < 0.10);
    // the completed spectrum is conjugate-symmetric, so the inverse is real
    CHECK(rr.imag_residual < 1e-10);
    CHECK(zr.imag_residual < 1e-10);
    CHECK(rr.rel_l2_error < zr.rel_l2_error);

    // reconstruction vanishes outside the ball and is real by construction
    for (int i = 0; i < 33; ++i)
        for (int j = 0; j < 33; ++j)
            for (int k = 0; k < 33; ++k)
                if (d.node(i, j, k).norm() > 1.0)
                    CHECK(rr.q_rec.at(i, j, k) == 0.0);

    // without ground truth the error is flagged unknown
    ReconstructionResult nf = reconstruct(samples, d, FillMode::radial, 2);
    CHECK(std::isnan(nf.rel_l2_error));
}
