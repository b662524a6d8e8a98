#include "scatter/green.hpp"

#include <cmath>

#include "scatter/fft3.hpp"

namespace scatter {

KernelParams::KernelParams(cdouble k_, const Vec3& beta_) : k(k_), beta(beta_) {
    if (k.imag() < 0.0)
        throw InvalidArgumentError("KernelParams: need Im k >= 0");
    if (!is_unit(beta, 1e-10))
        throw InvalidArgumentError("KernelParams: beta must be a unit vector");
}

cdouble free_green(const Vec3& x, const Vec3& y, cdouble k) {
    const Vec3 z = x - y;
    const double r = z.norm();
    if (r == 0.0)
        throw SingularEvaluationError(
            "free_green: diagonal x == y; use the corrected convolution");
    return std::exp(cdouble(0.0, 1.0) * k * r) / (4.0 * M_PI * r);
}

cdouble factored_green(const Vec3& z, const KernelParams& p) {
    const double r = z.norm();
    if (r == 0.0)
        throw SingularEvaluationError(
            "factored_green: singular at zero displacement");
    const double phase_len = r - p.beta.dot(z);
    return std::exp(cdouble(0.0, 1.0) * p.k * phase_len) / (4.0 * M_PI * r);
}

cdouble green_symbol(const Vec3& xi, cdouble k, const Vec3& beta) {
    const cdouble den = xi.norm2() - 2.0 * k * beta.dot(xi);
    if (std::abs(den) == 0.0)
        throw ResonantFrequencyError("green_symbol: xi on the characteristic set");
    return 1.0 / den;
}

namespace {

// kernel sample at integer displacement (di,dj,dk)*h, diagonal corrected
inline cdouble kernel_value(int di, int dj, int dk, double h,
                            const KernelParams& p) {
    if (di == 0 && dj == 0 && dk == 0) return {self_node_weight(h), 0.0};
    const Vec3 z{di * h, dj * h, dk * h};
    return factored_green(z, p);
}

ComplexField convolve_direct(const ComplexField& f, const KernelParams& p,
                             int n_out) {
    const BallDomain& d = f.domain;
    const int n = d.grid_n;
    const double h = d.spacing;
    BallDomain dout = d;
    dout.grid_n = n_out;
    ComplexField out(dout);
    const double h3 = h * h * h;
    for (int i = 0; i < n_out; ++i)
        for (int j = 0; j < n_out; ++j)
            for (int k = 0; k < n_out; ++k) {
                cdouble acc{};
                std::size_t idx = 0;
                for (int si = 0; si < n; ++si)
                    for (int sj = 0; sj < n; ++sj)
                        for (int sk = 0; sk < n; ++sk, ++idx) {
                            const cdouble fv = f.values[idx];
                            if (fv == 0.0) continue;
                            acc += kernel_value(i - si, j - sj, k - sk, h, p) * fv;
                        }
                out.at(i, j, k) = acc * h3;
            }
    return out;
}

// Cyclic convolution on an N^3 torus. decode_split: displacement index m
// decodes to m when m < split, else m - N. Linear output needs
// split = n_out with N >= n_out + n; the torus operator uses split = N/2.
ComplexField convolve_fft(const ComplexField& f, const KernelParams& p, int n_out,
                          int N, int split) {
    const BallDomain& d = f.domain;
    const int n = d.grid_n;
    const double h = d.spacing;
    const std::size_t NN = static_cast<std::size_t>(N) * N * N;

    std::vector<cdouble> kern(NN);
    std::vector<int> dec(N);
    for (int m = 0; m < N; ++m) dec[m] = m < split ? m : m - N;
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k, ++idx)
                kern[idx] = kernel_value(dec[i], dec[j], dec[k], h, p);

    std::vector<cdouble> src(NN, cdouble{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                src[(static_cast<std::size_t>(i) * N + j) * N + k] =
                    f.values[d.index(i, j, k)];

    fft3(kern, N, -1);
    fft3(src, N, -1);
    const double scale = h * h * h / static_cast<double>(NN);
    for (std::size_t m = 0; m < NN; ++m) src[m] *= kern[m] * scale;
    fft3(src, N, +1);

    BallDomain dout = d;
    dout.grid_n = n_out;
    ComplexField out(dout);
    for (int i = 0; i < n_out; ++i)
        for (int j = 0; j < n_out; ++j)
            for (int k = 0; k < n_out; ++k)
                out.at(i, j, k) =
                    src[(static_cast<std::size_t>(i) * N + j) * N + k];
    return out;
}

}  // namespace

ComplexField convolve_green(const ComplexField& f, const KernelParams& p,
                            ConvMethod method) {
    const int n = f.domain.grid_n;
    const bool direct =
        method == ConvMethod::direct || (method == ConvMethod::automatic && n <= 17);
    if (direct) return convolve_direct(f, p, n);
    return convolve_fft(f, p, n, 2 * n, n);
}

ComplexField convolve_green_extended(const ComplexField& f, const KernelParams& p,
                                     int n_out) {
    const int n = f.domain.grid_n;
    if (n_out < n)
        throw InvalidArgumentError("convolve_green_extended: n_out < source n");
    return convolve_fft(f, p, n_out, n_out + n, n_out);
}

ComplexField convolve_green_cyclic(const ComplexField& f, const KernelParams& p,
                                   int n_out) {
    const int n = f.domain.grid_n;
    if (n_out < 2 * n)
        throw InvalidArgumentError(
            "convolve_green_cyclic: torus must be at least twice the source box");
    return convolve_fft(f, p, n_out, n_out, n_out / 2);
}

}  // namespace scatter
