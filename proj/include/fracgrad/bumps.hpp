#pragma once

// Random smooth test functions: compactly supported Gaussian sums and band-limited
// mean-zero trigonometric fields. Generation is reproducible from a 64-bit seed.

#include "fracgrad/field.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fracgrad {

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

/// C-infinity radial cutoff: 1 for t <= 1/2, 0 for t >= 1.
double smooth_cutoff(double t);

struct GaussianTerm {
    Point center{0.0, 0.0, 0.0};
    double width = 1.0;
    double amplitude = 1.0;
};

/// Sum of Gaussians times smooth_cutoff(|x - cutoff_center| / cutoff_radius).
struct Bump {
    int n = 1;
    std::vector<GaussianTerm> terms;
    Point cutoff_center{0.0, 0.0, 0.0};
    double cutoff_radius = 1.0;

    double operator()(const Point& x) const;
    ScalarField sample(const GridSpec& grid) const;
};

/// 1-4 positive Gaussians with widths in [L/32, L/8], centres within half the cutoff radius
/// of `center`, cut off at `radius` (default L/8, so the support diameter is L/4).
Bump random_bump(int n, double extent, std::mt19937_64& rng, const Point& center = {0.0, 0.0, 0.0},
                 double radius = 0.0);

/// Single isotropic Gaussian exp(-|x - c|^2 / (2 sigma^2)), no cutoff.
ScalarField gaussian(const GridSpec& grid, double sigma, const Point& center = {0.0, 0.0, 0.0});

/// Real field with `modes` random Fourier modes, 0 < |k_d| <= N/4; exactly mean-zero up to rounding.
ScalarField random_band_limited(const GridSpec& grid, std::mt19937_64& rng, int modes = 8);

}  // namespace fracgrad
