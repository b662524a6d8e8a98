#include "scatter/potential.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace scatter {

namespace {

Potential sample_family(const BallDomain& domain,
                        std::function<double(const Vec3&)> f, int ell,
                        std::string label, double support_r) {
    Potential q;
    q.domain = domain;
    q.smoothness_ell = ell;
    q.label = std::move(label);
    q.evaluate = std::move(f);
    q.support_r = support_r;
    q.values.resize(domain.num_nodes());
    const int n = domain.grid_n;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++idx)
                q.values[idx] = q.evaluate(domain.node(i, j, k));

    // compact support with one-cell margin inside the ball
    const double margin = domain.radius_a - domain.spacing;
    idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++idx)
                if (domain.node(i, j, k).norm() >= margin && q.values[idx] != 0.0)
                    throw InvalidArgumentError(
                        "potential violates the compact-support margin "
                        "(support must end one cell inside the ball)");
    return q;
}

}  // namespace

Potential bump_potential(const BallDomain& domain, double amplitude,
                         double support_r) {
    if (support_r <= 0.0 || support_r >= domain.radius_a)
        throw InvalidArgumentError(
            "bump_potential: need 0 < support_r < radius_a");
    const double r2 = support_r * support_r;
    auto f = [amplitude, r2](const Vec3& p) {
        const double d2 = p.norm2();
        if (d2 >= r2) return 0.0;
        return amplitude * std::exp(-r2 / (r2 - d2));
    };
    std::ostringstream lab;
    lab << "bump(A=" << amplitude << ",r=" << support_r << ")";
    return sample_family(domain, f, 4, lab.str(), support_r);
}

Potential piecewise_smooth_potential(const BallDomain& domain, double amplitude,
                                     double support_r, int order) {
    if (order < 4)
        throw InvalidArgumentError(
            "piecewise_smooth_potential: need order >= 4");
    if (support_r <= 0.0 || support_r >= domain.radius_a)
        throw InvalidArgumentError(
            "piecewise_smooth_potential: need 0 < support_r < radius_a");
    const double r2 = support_r * support_r;
    auto f = [amplitude, r2, order](const Vec3& p) {
        const double t = 1.0 - p.norm2() / r2;
        if (t <= 0.0) return 0.0;
        return amplitude * std::pow(t, order);
    };
    std::ostringstream lab;
    lab << "poly" << order << "(A=" << amplitude << ",r=" << support_r << ")";
    return sample_family(domain, f, order, lab.str(), support_r);
}

Potential potential_from_function(const BallDomain& domain,
                                  const std::function<double(const Vec3&)>& f,
                                  int smoothness_ell, const std::string& label,
                                  double support_r) {
    return sample_family(domain, f, smoothness_ell, label, support_r);
}

cdouble fourier_of_potential(const Potential& q, const Vec3& xi) {
    const BallDomain& d = q.domain;
    const int n = d.grid_n;
    const double a2 = d.radius_a * d.radius_a;
    cdouble acc{};
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double x = d.coord(i);
        const double wi = trap_weight_1d(i, n);
        for (int j = 0; j < n; ++j) {
            const double y = d.coord(j);
            const double wij = wi * trap_weight_1d(j, n);
            for (int k = 0; k < n; ++k, ++idx) {
                const double z = d.coord(k);
                if (x * x + y * y + z * z > a2) continue;
                const double qv = q.values[idx];
                if (qv == 0.0) continue;
                const double phase = xi.x * x + xi.y * y + xi.z * z;
                acc += wij * trap_weight_1d(k, n) * qv *
                       cdouble(std::cos(phase), std::sin(phase));
            }
        }
    }
    return acc * (d.spacing * d.spacing * d.spacing);
}

void save_potential(const Potential& q, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("save_potential: cannot open " + path);
    os << "POTENTIAL 1\n"
       << "n " << q.domain.grid_n << "\n"
       << "a " << q.domain.radius_a << "\n"
       << "ell " << q.smoothness_ell << "\n"
       << "support_r " << q.support_r << "\n"
       << "label " << q.label << "\n\n";
    os.write(reinterpret_cast<const char*>(q.values.data()),
             static_cast<std::streamsize>(q.values.size() * sizeof(double)));
}

Potential load_potential(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("load_potential: cannot open " + path);
    std::string magic;
    int version = 0;
    is >> magic >> version;
    if (magic != "POTENTIAL" || version != 1)
        throw Error("load_potential: bad header in " + path);
    Potential q;
    int n = 0;
    double a = 0.0;
    std::string key;
    while (is >> key) {
        if (key == "n") is >> n;
        else if (key == "a") is >> a;
        else if (key == "ell") is >> q.smoothness_ell;
        else if (key == "support_r") is >> q.support_r;
        else if (key == "label") {
            std::getline(is, q.label);
            if (!q.label.empty() && q.label.front() == ' ') q.label.erase(0, 1);
            break;
        }
    }
    is.get();  // blank separator line
    q.domain = make_grid(a, n);
    q.values.resize(q.domain.num_nodes());
    is.read(reinterpret_cast<char*>(q.values.data()),
            static_cast<std::streamsize>(q.values.size() * sizeof(double)));
    if (!is) throw Error("load_potential: truncated payload in " + path);
    return q;
}

}  // namespace scatter
