#include "spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fracgrad::detail {

namespace {

// FFTW's planner is not thread safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Plan {
    fftw_complex* buffer = nullptr;
    fftw_plan plan = nullptr;
    std::size_t size = 0;

    Plan(int n, int N, int sign) {
        size = 1;
        int dims[3];
        for (int d = 0; d < n; ++d) {
            dims[d] = N;
            size *= static_cast<std::size_t>(N);
        }
        std::lock_guard<std::mutex> lock(planner_mutex());
        buffer = fftw_alloc_complex(size);
        if (!buffer) throw std::bad_alloc();
        plan = fftw_plan_dft(n, dims, buffer, buffer, sign, FFTW_ESTIMATE);
        if (!plan) {
            fftw_free(buffer);
            throw std::runtime_error("fftw: planning failed");
        }
    }
    ~Plan() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
        fftw_free(buffer);
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
};

Plan& plan_for(int n, int N, int sign) {
    thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<Plan>> cache;
    auto& slot = cache[{n, N, sign}];
    if (!slot) slot = std::make_unique<Plan>(n, N, sign);
    return *slot;
}

}  // namespace

Spectrum forward(const ScalarField& u) {
    const GridSpec& g = u.grid();
    Plan& p = plan_for(g.n, g.points, FFTW_FORWARD);
    for (std::size_t i = 0; i < p.size; ++i) {
        p.buffer[i][0] = u[i];
        p.buffer[i][1] = 0.0;
    }
    fftw_execute(p.plan);
    Spectrum out(p.size);
    std::memcpy(static_cast<void*>(out.data()), p.buffer, p.size * sizeof(fftw_complex));
    return out;
}

std::vector<double> inverse(const GridSpec& g, const Spectrum& spec, double* imag_max) {
    Plan& p = plan_for(g.n, g.points, FFTW_BACKWARD);
    if (spec.size() != p.size) throw std::logic_error("inverse: spectrum size mismatch");
    std::memcpy(static_cast<void*>(p.buffer), spec.data(), p.size * sizeof(fftw_complex));
    fftw_execute(p.plan);
    const double scale = 1.0 / static_cast<double>(p.size);
    std::vector<double> out(p.size);
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size; ++i) {
        out[i] = p.buffer[i][0] * scale;
        worst = std::max(worst, std::fabs(p.buffer[i][1] * scale));
    }
    if (imag_max) *imag_max = worst;
    return out;
}

}  // namespace fracgrad::detail
