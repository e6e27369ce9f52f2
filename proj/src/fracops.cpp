#include "fracgrad/fracops.hpp"
#include "fracgrad/errors.hpp"
#include "spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fracgrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMeanZeroTolerance = 1e-12;

void require_s(double s, const char* who) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError(std::string(who) + ": s must lie in (0,1)");
}

void require_axis(int axis, int n, const char* who) {
    if (axis < 0 || axis >= n) throw DomainError(std::string(who) + ": axis out of range");
}

// Multiplies the spectrum of u by m(k) and transforms back.
template <typename Symbol>
ScalarField transform_apply(const ScalarField& u, Symbol&& m, SpectralDiagnostics* diag) {
    const GridSpec& g = u.grid();
    detail::Spectrum spec = detail::forward(u);
    const int N = g.points;
    for (std::size_t f = 0; f < spec.size(); ++f) {
        const Index idx = g.unflatten(f);
        Index k{0, 0, 0};
        for (int d = 0; d < g.n; ++d) k[d] = detail::wavenumber(idx[d], N);
        spec[f] *= m(k);
    }
    double residue = 0.0;
    std::vector<double> out = detail::inverse(g, spec, &residue);
    if (diag) diag->imag_residue = residue;
    return ScalarField(g, std::move(out));
}

void check_zero_mode(const ScalarField& u, const std::vector<MultiplierSymbol>& syms, SpectralDiagnostics* diag) {
    const double mean = u.mean();
    if (diag) diag->input_mean = mean;
    for (const auto& s : syms) {
        if (s.singular_at_zero() && s.zero_mode == ZeroModePolicy::Reject &&
            std::fabs(mean) > kMeanZeroTolerance * u.max_abs())
            throw PreconditionError("apply_multiplier: input must be mean-zero (mean = " + std::to_string(mean) + ")");
    }
}

}  // namespace

MultiplierSymbol MultiplierSymbol::frac_laplacian(double s, ZeroModePolicy z) {
    return {Kind::FracLaplacian, s, 0, z};
}
MultiplierSymbol MultiplierSymbol::riesz_potential(double alpha, ZeroModePolicy z) {
    return {Kind::RieszPotential, alpha, 0, z};
}
MultiplierSymbol MultiplierSymbol::riesz_transform(int axis, ZeroModePolicy z) {
    return {Kind::RieszTransform, 0.0, axis, z};
}
MultiplierSymbol MultiplierSymbol::frac_gradient_component(double s, int axis, ZeroModePolicy z) {
    return {Kind::FracGradientComponent, s, axis, z};
}

bool MultiplierSymbol::singular_at_zero() const {
    switch (kind) {
        case Kind::FracLaplacian: return order < 0.0;
        case Kind::RieszPotential: return true;
        case Kind::RieszTransform: return true;
        case Kind::FracGradientComponent: return order < 0.0;
    }
    return true;
}

std::complex<double> MultiplierSymbol::value(const Point& xi, int n) const {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += xi[d] * xi[d];
    if (r2 == 0.0) return 0.0;
    const double r = std::sqrt(r2);
    switch (kind) {
        case Kind::FracLaplacian: return std::pow(kTwoPi * r, order);
        case Kind::RieszPotential: return std::pow(kTwoPi * r, -order);
        case Kind::RieszTransform: return {0.0, -xi[axis] / r};
        case Kind::FracGradientComponent: return {0.0, -kTwoPi * xi[axis] * std::pow(kTwoPi * r, order - 1.0)};
    }
    return 0.0;
}

ScalarField apply_multipliers(const ScalarField& u, const std::vector<MultiplierSymbol>& syms,
                              SpectralDiagnostics* diag) {
    const GridSpec& g = u.grid();
    for (const auto& s : syms)
        if (s.odd()) require_axis(s.axis, g.n, "apply_multiplier");
    check_zero_mode(u, syms, diag);
    const int nyquist = g.points / 2;
    return transform_apply(
        u,
        [&](const Index& k) {
            Point xi{0.0, 0.0, 0.0};
            for (int d = 0; d < g.n; ++d) xi[d] = k[d] / g.extent;
            std::complex<double> m = 1.0;
            for (const auto& s : syms) {
                if (s.odd() && std::abs(k[s.axis]) == nyquist) return std::complex<double>(0.0);
                m *= s.value(xi, g.n);
            }
            return m;
        },
        diag);
}

ScalarField apply_multiplier(const ScalarField& u, const MultiplierSymbol& sym, SpectralDiagnostics* diag) {
    return apply_multipliers(u, {sym}, diag);
}

ScalarField apply_radial_power(const ScalarField& u, double e, ZeroModePolicy z) {
    const GridSpec& g = u.grid();
    if (e < 0.0 && z == ZeroModePolicy::Reject && std::fabs(u.mean()) > kMeanZeroTolerance * u.max_abs())
        throw PreconditionError("apply_radial_power: input must be mean-zero");
    return transform_apply(
        u,
        [&](const Index& k) {
            double r2 = 0.0;
            for (int d = 0; d < g.n; ++d) r2 += double(k[d]) * k[d];
            if (r2 == 0.0) return std::complex<double>(0.0);
            return std::complex<double>(std::pow(kTwoPi * std::sqrt(r2) / g.extent, e));
        },
        nullptr);
}

ScalarField frac_laplacian(const ScalarField& u, double s, ZeroModePolicy z) {
    if (!(s > -1.0 && s < 1.0)) throw DomainError("frac_laplacian: s must lie in (-1,1)");
    if (s == 0.0) return u;
    return apply_multiplier(u, MultiplierSymbol::frac_laplacian(s, z));
}

ScalarField riesz_potential(const ScalarField& u, double alpha, ZeroModePolicy z) {
    if (!(alpha > 0.0 && alpha < u.grid().n)) throw DomainError("riesz_potential: alpha must lie in (0, n)");
    return apply_multiplier(u, MultiplierSymbol::riesz_potential(alpha, z));
}

ScalarField riesz_transform(const ScalarField& u, int axis, ZeroModePolicy z) {
    require_axis(axis, u.grid().n, "riesz_transform");
    return apply_multiplier(u, MultiplierSymbol::riesz_transform(axis, z));
}

VectorField spectral_gradient(const ScalarField& u) {
    const GridSpec& g = u.grid();
    const int nyquist = g.points / 2;
    std::vector<ScalarField> comps;
    for (int j = 0; j < g.n; ++j) {
        comps.push_back(transform_apply(
            u,
            [&](const Index& k) {
                if (std::abs(k[j]) == nyquist) return std::complex<double>(0.0);
                return std::complex<double>(0.0, kTwoPi * k[j] / g.extent);
            },
            nullptr));
    }
    return VectorField(std::move(comps));
}

VectorField frac_gradient(const ScalarField& u, double s) {
    require_s(s, "frac_gradient");
    std::vector<ScalarField> comps;
    for (int j = 0; j < u.grid().n; ++j)
        comps.push_back(apply_multiplier(u, MultiplierSymbol::frac_gradient_component(s, j)));
    return VectorField(std::move(comps));
}

ScalarField frac_divergence(const VectorField& v, double s) {
    require_s(s, "frac_divergence");
    const GridSpec& g = v.grid();
    if (v.dim() != static_cast<std::size_t>(g.n))
        throw StructuralError("frac_divergence: vector field needs n components");
    ScalarField acc = ScalarField::zeros(g);
    for (int j = 0; j < g.n; ++j)
        acc = acc + apply_multiplier(v[j], MultiplierSymbol::frac_gradient_component(s, j));
    return acc;
}

}  // namespace fracgrad
