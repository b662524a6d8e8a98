#include "scatter/fft3.hpp"

#include <fftw3.h>

#include <mutex>

#include "scatter/errors.hpp"

namespace scatter {

namespace {
std::mutex planner_mutex;  // FFTW planning is not thread-safe
}

void fft3(std::vector<cdouble>& data, int n, int sign) {
    const std::size_t expected =
        static_cast<std::size_t>(n) * n * n;
    if (data.size() != expected)
        throw InvalidArgumentError("fft3: data size does not match n^3");
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_3d(n, n, n, ptr, ptr,
                                sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                FFTW_ESTIMATE);
    }
    if (!plan) throw Error("fft3: planner failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace scatter
