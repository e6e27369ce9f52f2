#pragma once

// Complex FFT on the sampling grid, backed by FFTW. Plans are cached per thread.

#include "fracgrad/field.hpp"

#include <complex>
#include <vector>

namespace fracgrad::detail {

using Spectrum = std::vector<std::complex<double>>;

/// Unnormalized forward DFT of real samples (sign -1).
Spectrum forward(const ScalarField& u);

/// Normalized inverse DFT (sign +1, divided by N^n). Returns real part; `imag_max` receives max |Im|.
std::vector<double> inverse(const GridSpec& grid, const Spectrum& spec, double* imag_max);

/// Signed integer wavenumber of DFT index i on an axis with N points.
inline int wavenumber(int i, int N) { return i <= N / 2 ? i : i - N; }

}  // namespace fracgrad::detail
