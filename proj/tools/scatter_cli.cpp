// Command-line front end: experiment configuration, sweep orchestration and
// CSV/JSON artifact emission. Exit codes: 0 ok, 1 usage, 2 numerical failure,
// 3 check failed.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scatter/asymptotics.hpp"
#include "scatter/certify.hpp"
#include "scatter/csv.hpp"
#include "scatter/identities.hpp"
#include "scatter/inversion.hpp"
#include "scatter/radon.hpp"
#include "scatter/solver.hpp"
#include "scatter/spectral.hpp"

using namespace scatter;
namespace fs = std::filesystem;

namespace {

struct Config {
    std::string family = "bump";  // bump | poly
    std::string potential_file;   // when set, loaded instead of the family
    double amplitude = 0.1;
    double support_r = 0.8;
    int order = 4;
    double radius_a = 1.0;
    int grid_n = 33;
    int directions = 64;
    std::vector<double> ks{5.0};
    std::vector<double> kappas{8.0, 16.0, 32.0, 64.0};
    std::string eta_rule = "log";  // log -> ln(kappa)/a, fixed -> eta_fixed
    double eta_fixed = 1.0;
    std::vector<double> alpha{0.0, 0.0, 1.0};
    std::vector<double> beta{0.0, 1.0, 0.0};
    double tol = 1e-8;
    std::string outdir = "out";
    std::uint64_t seed = 0x5ca77e3u;

    std::string canonical() const {
        std::ostringstream os;
        os << family << ";" << potential_file << ";" << amplitude << ";" << support_r << ";" << order
           << ";" << radius_a << ";" << grid_n << ";" << directions << ";";
        for (double k : ks) os << k << ",";
        os << ";";
        for (double k : kappas) os << k << ",";
        os << ";" << eta_rule << ";" << eta_fixed << ";";
        for (double v : alpha) os << v << ",";
        os << ";";
        for (double v : beta) os << v << ",";
        os << ";" << tol << ";" << seed;
        return os.str();
    }
    std::string hash() const { return hash_hex(config_hash(canonical())); }

    Potential make_potential() const {
        if (!potential_file.empty()) {
            Potential q = load_potential(potential_file);
            std::cout << "loaded potential '" << q.label << "'\n";
            return q;
        }
        BallDomain d = make_grid(radius_a, grid_n);
        if (family == "bump") return bump_potential(d, amplitude, support_r);
        if (family == "poly")
            return piecewise_smooth_potential(d, amplitude, support_r, order);
        throw InvalidArgumentError("unknown potential family: " + family);
    }
    Vec3 alpha_v() const { return Vec3{alpha[0], alpha[1], alpha[2]}.normalized(); }
    Vec3 beta_v() const { return Vec3{beta[0], beta[1], beta[2]}.normalized(); }
    double eta_of(double kappa) const {
        return eta_rule == "fixed" ? eta_fixed : eta_rule_log(kappa, radius_a);
    }
    std::ofstream open(const std::string& name) const {
        fs::create_directories(outdir);
        std::ofstream os(fs::path(outdir) / name);
        if (!os) throw Error("cannot open output file " + name);
        return os;
    }
};

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--family", cfg.family, "potential family (bump|poly)");
    cmd->add_option("--potential-file", cfg.potential_file,
                    "load a stored potential instead of a family");
    cmd->add_option("--amplitude", cfg.amplitude);
    cmd->add_option("--support-r", cfg.support_r);
    cmd->add_option("--order", cfg.order, "exponent of the poly family");
    cmd->add_option("--radius-a", cfg.radius_a);
    cmd->add_option("--grid-n", cfg.grid_n);
    cmd->add_option("--directions", cfg.directions);
    cmd->add_option("--k", cfg.ks, "wavenumber list");
    cmd->add_option("--kappa", cfg.kappas, "kappa sweep");
    cmd->add_option("--eta-rule", cfg.eta_rule, "log | fixed");
    cmd->add_option("--eta", cfg.eta_fixed, "eta when --eta-rule=fixed");
    cmd->add_option("--alpha", cfg.alpha)->expected(3);
    cmd->add_option("--beta", cfg.beta)->expected(3);
    cmd->add_option("--tol", cfg.tol);
    cmd->add_option("--outdir", cfg.outdir);
    cmd->add_option("--seed", cfg.seed);
}

int cmd_forward(const Config& cfg) {
    Potential q = cfg.make_potential();
    auto os = cfg.open("forward_axis.csv");
    CsvWriter w(os, {"k", "x3", "re_eps", "im_eps", "re_u", "im_u"}, cfg.hash());
    for (double k : cfg.ks) {
        ScatteringSolution sol = solve_eps(q, cfg.alpha_v(), k, cfg.tol);
        std::cout << "k=" << k << " iterations=" << sol.iterations
                  << " residual=" << sol.residual << "\n";
        const int n = q.domain.grid_n;
        const int c = n / 2;
        for (int i = 0; i < n; ++i)
            w.row({k, q.domain.coord(i), sol.eps.at(c, c, i).real(),
                   sol.eps.at(c, c, i).imag(), sol.u.at(c, c, i).real(),
                   sol.u.at(c, c, i).imag()});
    }
    return 0;
}

int cmd_amplitude(const Config& cfg) {
    Potential q = cfg.make_potential();
    auto os = cfg.open("amplitude.csv");
    AmplitudeTable t;
    for (double k : cfg.ks) {
        ScatteringSolution sol = solve_eps(q, cfg.alpha_v(), k, cfg.tol);
        const cdouble A = scattering_amplitude(q, sol, cfg.beta_v());
        t.entries.push_back({cfg.beta_v(), cfg.alpha_v(), k, A});
        std::cout << "k=" << k << " A=" << A << "\n";
    }
    t.to_csv(os, cfg.hash());
    return 0;
}

int cmd_dataset(const Config& cfg) {
    Potential q = cfg.make_potential();
    AmplitudeTable t = fixed_direction_dataset(
        q, cfg.alpha_v(), fibonacci_sphere(cfg.directions), cfg.ks, cfg.tol);
    auto os = cfg.open("dataset.csv");
    t.to_csv(os, cfg.hash());
    std::cout << "wrote " << t.entries.size() << " rows\n";
    return 0;
}

int cmd_radon(const Config& cfg) {
    Potential q = cfg.make_potential();
    RadonProfile prof = radon_transform(q, cfg.beta_v(), 2 * q.domain.grid_n);
    auto os = cfg.open("radon_profile.csv");
    CsvWriter w(os, {"lambda", "value"}, cfg.hash());
    for (std::size_t i = 0; i < prof.lambdas.size(); ++i)
        w.row({prof.lambdas[i], prof.values[i]});
    std::cout << "wrote " << prof.lambdas.size() << " offsets\n";
    return 0;
}

int cmd_verify_identities(const Config& cfg) {
    Potential q1 = cfg.make_potential();
    BallDomain d = q1.domain;
    Potential q2 = bump_potential(d, 1.2 * cfg.amplitude, 0.7 * cfg.support_r);
    auto os = cfg.open("identities.csv");
    CsvWriter w(os,
                {"k", "which", "re_lhs", "im_lhs", "re_rhs", "im_rhs", "abs_err",
                 "rel_err"},
                cfg.hash());
    bool ok = true;
    for (double k : cfg.ks) {
        IdentityReport reps[3] = {
            amplitude_difference_check(q1, q2, cfg.beta_v(), cfg.alpha_v(), k,
                                       cfg.tol),
            reciprocity_check(q1, cfg.beta_v(), cfg.alpha_v(), k, cfg.tol),
            orthogonality_relation_check(q1, q2, cfg.alpha_v(), cfg.beta_v(), k,
                                         cfg.tol)};
        const double tols[3] = {1e-2, 1e-2, 1e-8};
        for (int i = 0; i < 3; ++i) {
            const auto& r = reps[i];
            w.row({k, double(i), r.lhs.real(), r.lhs.imag(), r.rhs.real(),
                   r.rhs.imag(), r.abs_err, r.rel_err});
            std::cout << r.context << ": rel_err=" << r.rel_err << "\n";
            if (r.rel_err > tols[i]) ok = false;
        }
    }
    return ok ? 0 : 3;
}

int cmd_estimates(const Config& cfg) {
    Potential q = cfg.make_potential();
    EstimateReport rep =
        decay_bound_check(q, fibonacci_sphere(std::min(cfg.directions, 16)),
                          cfg.kappas, {0.0, 1.0, 2.0, 3.0});
    auto os = cfg.open("decay_bound.csv");
    rep.to_csv(os, cfg.hash());
    rep.summary(std::cout);
    return rep.verdict ? 0 : 3;
}

int cmd_eta_curve(const Config& cfg) {
    Potential q = cfg.make_potential();
    DirectionSet set = fibonacci_sphere(std::min(cfg.directions, 16));
    auto os = cfg.open("eta_curve.csv");
    CsvWriter w(os, {"kappa", "eta", "eta_over_log_kappa"}, cfg.hash());
    for (double kap : cfg.kappas) {
        FindEtaResult r = find_eta(q, kap, set, 1e-4);
        w.row({kap, r.eta, r.eta / std::log(kap)});
        std::cout << "kappa=" << kap << " eta=" << r.eta << "\n";
    }
    return 0;
}

int cmd_nu_sweep(const Config& cfg) {
    Potential q = cfg.make_potential();
    DirectionSet set = fibonacci_sphere(cfg.directions);
    auto os = cfg.open("nu_sweep.csv");
    CsvWriter w(os, {"kappa", "eta", "nu", "skipped", "tail_bound"}, cfg.hash());
    for (double kap : cfg.kappas) {
        NuStats stats;
        const double eta = cfg.eta_of(kap);
        const double nu =
            nu_functional(NuMode::leading_term, q, kap, eta, set, &stats);
        w.row({kap, eta, nu, stats.skipped_fraction, stats.tail_bound});
        std::cout << "kappa=" << kap << " nu=" << nu << "\n";
    }
    return 0;
}

int cmd_t2_norm(const Config& cfg) {
    Potential q = cfg.make_potential();
    auto os = cfg.open("t2_norm.csv");
    CsvWriter w(os, {"kappa", "eta", "estimate"}, cfg.hash());
    for (double kap : cfg.kappas) {
        const double eta = cfg.eta_of(kap);
        const double v = t2_norm_estimate(q, kap, eta, 8, cfg.seed);
        w.row({kap, eta, v});
        std::cout << "kappa=" << kap << " estimate=" << v << "\n";
    }
    return 0;
}

int cmd_j_integral(const Config& cfg) {
    auto os = cfg.open("j_integral.csv");
    CsvWriter w(os,
                {"kappa", "eta", "J", "kappa_J", "split_bound", "Jcal", "J1",
                 "J2", "j1", "j2"},
                cfg.hash());
    for (double kap : cfg.kappas) {
        const double eta = cfg.eta_of(kap);
        JIntegralResult r = j_integral(kap, eta, std::max(4, cfg.order));
        w.row({kap, eta, r.J, kap * r.J, r.split_bound, r.Jcal, r.J1, r.J2, r.j1,
               r.j2});
        std::cout << "kappa=" << kap << " J=" << r.J << "\n";
    }
    return 0;
}

int cmd_invert(const Config& cfg, bool solver_data, const std::string& fill) {
    Potential q = cfg.make_potential();
    DirectionSet betas = fibonacci_sphere(cfg.directions);
    AmplitudeTable data =
        solver_data
            ? fixed_direction_dataset(q, cfg.alpha_v(), betas, cfg.ks, cfg.tol)
            : exact_born_dataset(q, cfg.alpha_v(), betas, cfg.ks);
    ReconstructionResult rec = reconstruct(
        data_to_fourier_samples(data, cfg.alpha_v()), q.domain,
        fill == "radial" ? FillMode::radial : FillMode::zero, 2, &q);
    fs::create_directories(cfg.outdir);
    save_potential(rec.q_rec, (fs::path(cfg.outdir) / "q_rec.bin").string());
    auto os = cfg.open("invert_summary.csv");
    CsvWriter w(os, {"rel_l2_error", "coverage", "low_coverage"}, cfg.hash());
    w.row({rec.rel_l2_error, rec.coverage_map,
           rec.low_coverage_warning ? 1.0 : 0.0});
    std::cout << "rel_l2_error=" << rec.rel_l2_error
              << " coverage=" << rec.coverage_map << "\n";
    return 0;
}

int cmd_all_checks(const Config& cfg) {
    fs::create_directories(cfg.outdir);
    CertifyOptions opts;
    opts.outdir = cfg.outdir;
    opts.verbose = true;
    opts.seed = cfg.seed;
    auto results = run_all_checks(opts, std::cout);
    nlohmann::json j;
    j["config"] = cfg.hash();
    int failed = 0;
    for (const auto& r : results) {
        j["checks"].push_back(
            {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass) ++failed;
    }
    j["passed"] = static_cast<int>(results.size()) - failed;
    j["total"] = static_cast<int>(results.size());
    std::ofstream js(fs::path(cfg.outdir) / "all_checks.json");
    js << j.dump(2) << "\n";
    std::cout << (results.size() - failed) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forward scattering map and certification toolkit"};
    app.set_config("--config", "", "key=value configuration file");
    app.fallthrough(true);  // experiment options live on the app, after the
                            // subcommand name they fall through to it
    app.require_subcommand(1);

    Config cfg;
    bool solver_data = false;
    std::string fill = "zero";
    add_common(&app, cfg);

    auto* forward = app.add_subcommand("forward", "solve one incident wave");
    auto* amplitude = app.add_subcommand("amplitude", "far-field coefficient");
    auto* dataset =
        app.add_subcommand("dataset", "A(beta, alpha0, k) product sweep");
    auto* radon = app.add_subcommand("radon", "plane-integral profile");
    auto* verify =
        app.add_subcommand("verify-identities", "identity cross-checks");
    auto* estimates = app.add_subcommand("estimates", "decay-bound sweep");
    auto* eta = app.add_subcommand("eta-curve", "matching-height sweep");
    auto* nu = app.add_subcommand("nu-sweep", "contraction-factor sweep");
    auto* t2 = app.add_subcommand("t2-norm", "iterated-operator estimate");
    auto* jint = app.add_subcommand("j-integral", "tail-integral sweep");
    auto* invert = app.add_subcommand("invert", "first-order reconstruction");
    auto* checks = app.add_subcommand("all-checks", "full certification suite");
    (void)checks;
    invert->add_flag("--solver-data", solver_data,
                     "use solver data instead of first-order synthetic data");
    invert->add_option("--fill", fill, "zero | radial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (forward->parsed()) return cmd_forward(cfg);
        if (amplitude->parsed()) return cmd_amplitude(cfg);
        if (dataset->parsed()) return cmd_dataset(cfg);
        if (radon->parsed()) return cmd_radon(cfg);
        if (verify->parsed()) return cmd_verify_identities(cfg);
        if (estimates->parsed()) return cmd_estimates(cfg);
        if (eta->parsed()) return cmd_eta_curve(cfg);
        if (nu->parsed()) return cmd_nu_sweep(cfg);
        if (t2->parsed()) return cmd_t2_norm(cfg);
        if (jint->parsed()) return cmd_j_integral(cfg);
        if (invert->parsed()) return cmd_invert(cfg, solver_data, fill);
        if (checks->parsed()) return cmd_all_checks(cfg);
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
