#include "fracgrad/bumps.hpp"
#include "fracgrad/errors.hpp"

#include <cmath>
#include <numbers>

namespace fracgrad {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

double smooth_cutoff(double t) {
    if (t <= 0.5) return 1.0;
    if (t >= 1.0) return 0.0;
    // Transition built from psi(x) = exp(-1/x).
    const double a = 2.0 * (1.0 - t);  // 1 at t = 1/2, 0 at t = 1
    const double pa = std::exp(-1.0 / a);
    const double pb = std::exp(-1.0 / (1.0 - a));
    return pa / (pa + pb);
}

double Bump::operator()(const Point& x) const {
    double r2c = 0.0;
    for (int d = 0; d < n; ++d) r2c += (x[d] - cutoff_center[d]) * (x[d] - cutoff_center[d]);
    const double cut = smooth_cutoff(std::sqrt(r2c) / cutoff_radius);
    if (cut == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& t : terms) {
        double r2 = 0.0;
        for (int d = 0; d < n; ++d) r2 += (x[d] - t.center[d]) * (x[d] - t.center[d]);
        sum += t.amplitude * std::exp(-0.5 * r2 / (t.width * t.width));
    }
    return sum * cut;
}

ScalarField Bump::sample(const GridSpec& grid) const {
    if (grid.n != n) throw StructuralError("Bump::sample: dimension mismatch");
    return fracgrad::sample(grid, [this](const Point& x) { return (*this)(x); });
}

Bump random_bump(int n, double extent, std::mt19937_64& rng, const Point& center, double radius) {
    Bump b;
    b.n = n;
    b.cutoff_center = center;
    b.cutoff_radius = radius > 0.0 ? radius : extent / 8.0;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
        GaussianTerm t;
        // Uniform point in the ball of half the cutoff radius (rejection from the cube).
        for (;;) {
            double r2 = 0.0;
            Point off{0.0, 0.0, 0.0};
            for (int d = 0; d < n; ++d) {
                off[d] = uniform(rng, -1.0, 1.0);
                r2 += off[d] * off[d];
            }
            if (r2 > 1.0) continue;
            for (int d = 0; d < n; ++d) t.center[d] = center[d] + 0.5 * b.cutoff_radius * off[d];
            break;
        }
        t.width = uniform(rng, extent / 32.0, extent / 8.0);
        t.amplitude = uniform(rng, 0.5, 1.5);
        b.terms.push_back(t);
    }
    return b;
}

ScalarField gaussian(const GridSpec& grid, double sigma, const Point& center) {
    if (!(sigma > 0.0)) throw DomainError("gaussian: sigma must be positive");
    return sample(grid, [&](const Point& x) {
        double r2 = 0.0;
        for (int d = 0; d < grid.n; ++d) r2 += (x[d] - center[d]) * (x[d] - center[d]);
        return std::exp(-0.5 * r2 / (sigma * sigma));
    });
}

ScalarField random_band_limited(const GridSpec& grid, std::mt19937_64& rng, int modes) {
    grid.validate();
    const int kmax = grid.points / 4;
    struct Mode {
        int k[3];
        double a, b;
    };
    std::vector<Mode> ms;
    while (static_cast<int>(ms.size()) < modes) {
        Mode m{{0, 0, 0}, 0.0, 0.0};
        bool nonzero = false;
        for (int d = 0; d < grid.n; ++d) {
            m.k[d] = static_cast<int>(rng() % (2 * kmax + 1)) - kmax;
            nonzero = nonzero || m.k[d] != 0;
        }
        if (!nonzero) continue;
        m.a = uniform(rng, -1.0, 1.0);
        m.b = uniform(rng, -1.0, 1.0);
        ms.push_back(m);
    }
    const double w = 2.0 * std::numbers::pi / grid.extent;
    return sample(grid, [&](const Point& x) {
        double v = 0.0;
        for (const auto& m : ms) {
            double phase = 0.0;
            for (int d = 0; d < grid.n; ++d) phase += m.k[d] * x[d];
            v += m.a * std::cos(w * phase) + m.b * std::sin(w * phase);
        }
        return v;
    });
}

}  // namespace fracgrad
