#pragma once

// Fractional operators on sampled fields: Fourier-multiplier versions on the periodic box,
// direct singular-integral quadrature for compactly supported samples, and Riesz
// potentials of finite atomic measures.
//
// Fourier convention: u^(xi) = integral of u(x) exp(-2 pi i x.xi), discrete xi = k / L.

#include "fracgrad/constants.hpp"
#include "fracgrad/field.hpp"

#include <complex>
#include <vector>

namespace fracgrad {

enum class ZeroModePolicy {
    Zero,    ///< singular symbols are set to 0 at xi = 0 (works modulo constants)
    Reject,  ///< singular symbols require mean-zero input (|mean| <= 1e-12 max|u|)
};

struct MultiplierSymbol {
    enum class Kind { FracLaplacian, RieszPotential, RieszTransform, FracGradientComponent };

    Kind kind = Kind::FracLaplacian;
    double order = 0.0;  ///< s or alpha
    int axis = 0;        ///< j, zero-based, for the two vector-valued kinds
    ZeroModePolicy zero_mode = ZeroModePolicy::Zero;

    static MultiplierSymbol frac_laplacian(double s, ZeroModePolicy z = ZeroModePolicy::Zero);
    static MultiplierSymbol riesz_potential(double alpha, ZeroModePolicy z = ZeroModePolicy::Zero);
    static MultiplierSymbol riesz_transform(int axis, ZeroModePolicy z = ZeroModePolicy::Zero);
    static MultiplierSymbol frac_gradient_component(double s, int axis, ZeroModePolicy z = ZeroModePolicy::Zero);

    /// (2 pi |xi|)^s, (2 pi |xi|)^-alpha, -i xi_j / |xi|, (-2 pi i xi_j)(2 pi |xi|)^{s-1}.
    /// At xi = 0 returns 0.
    std::complex<double> value(const Point& xi, int n) const;

    /// True when the symbol has no limit (or blows up) at xi = 0.
    bool singular_at_zero() const;

    /// Odd symbols are zeroed on the Nyquist plane of their axis to keep real fields real.
    bool odd() const { return kind == Kind::RieszTransform || kind == Kind::FracGradientComponent; }
};

struct SpectralDiagnostics {
    double imag_residue = 0.0;  ///< max |Im| of the inverse transform before it was discarded
    double input_mean = 0.0;
};

/// Forward transform, multiply by the symbol, inverse transform, keep the real part.
/// Throws PreconditionError when a Reject-policy singular symbol meets a non-mean-zero field.
ScalarField apply_multiplier(const ScalarField& u, const MultiplierSymbol& sym, SpectralDiagnostics* diag = nullptr);

/// Product of several symbols applied in one transform pair.
ScalarField apply_multipliers(const ScalarField& u, const std::vector<MultiplierSymbol>& syms,
                              SpectralDiagnostics* diag = nullptr);

/// Radial multiplier (2 pi |xi|)^e with 0 at xi = 0; any real e. Used for orders outside (-1, 1).
ScalarField apply_radial_power(const ScalarField& u, double e, ZeroModePolicy z = ZeroModePolicy::Zero);

/// (-Delta)^{s/2} for s in (-1, 1); s = 0 returns u unchanged; s < 0 behaves as a Riesz potential.
ScalarField frac_laplacian(const ScalarField& u, double s, ZeroModePolicy z = ZeroModePolicy::Reject);

/// Normalized Riesz potential I_alpha, symbol (2 pi |xi|)^-alpha, alpha in (0, n).
ScalarField riesz_potential(const ScalarField& u, double alpha, ZeroModePolicy z = ZeroModePolicy::Zero);

/// Riesz transform R_j, axis zero-based.
ScalarField riesz_transform(const ScalarField& u, int axis, ZeroModePolicy z = ZeroModePolicy::Zero);

/// Classical gradient by spectral differentiation (symbol 2 pi i xi_j).
VectorField spectral_gradient(const ScalarField& u);

/// Fractional gradient R (-Delta)^{s/2} u, s in (0, 1).
VectorField frac_gradient(const ScalarField& u, double s);

/// div^s V = (-Delta)^{s/2} (R . V), s in (0, 1). V must have n components.
ScalarField frac_divergence(const VectorField& v, double s);

// ---------------------------------------------------------------------------
// Direct quadrature. The samples are treated as a compactly supported function on R^n
// (zero outside the box, no periodic images).
// ---------------------------------------------------------------------------

struct DirectResult {
    ScalarField value;
    double tail_estimate = 0.0;  ///< max over x of the analytic kernel mass beyond half a box, times |u(x)|
};

struct DirectVectorResult {
    VectorField value;
    double tail_estimate = 0.0;
};

/// (-Delta)^{s/2} u = c_{n,s,+} p.v. integral of (u(x) - u(x+y)) / |y|^{n+s}, s in (0, 1).
DirectResult frac_laplacian_direct(const ScalarField& u, double s);

/// Fractional gradient by quadrature of its odd kernel, s in (0, 1).
DirectVectorResult frac_gradient_direct(const ScalarField& u, double s);

/// Unnormalized potential sum f(y) |x - y|^{alpha-n} h^n; the self cell uses the exact
/// integral of |z|^{alpha-n} over the ball of volume h^n.
ScalarField riesz_potential_direct(const ScalarField& f, double alpha);

/// riesz_potential_direct restricted to the listed flat sample indices.
std::vector<double> riesz_potential_direct_at(const ScalarField& f, double alpha,
                                              const std::vector<std::size_t>& samples);

/// Unnormalized potential at an arbitrary point x; samples at distance 0 are skipped.
double riesz_potential_at(const ScalarField& f, double alpha, const Point& x);

/// One-sided Marchaud derivative of a 1-D field: s/Gamma(1-s) times the integral over t > 0 of
/// (u(x) - u(x + t)) t^{-1-s} for Sign::Plus, and of (u(x) - u(x - t)) t^{-1-s} for Sign::Minus.
/// Their sum is 2 cos(pi s/2) (-Delta)^{s/2} u, their difference 2 sin(pi s/2) times the fractional gradient.
ScalarField liouville_onesided(const ScalarField& u, double s, Sign sign);

// ---------------------------------------------------------------------------
// Atomic measures
// ---------------------------------------------------------------------------

struct Atom {
    Point location{0.0, 0.0, 0.0};
    double mass = 0.0;
};

struct AtomicMeasure {
    int n = 1;
    std::vector<Atom> atoms;

    /// Throws DomainError on negative or non-finite mass.
    void validate() const;
    double total_mass() const;
    /// mu(B(x, r)), open ball.
    double ball_mass(const Point& x, double r) const;
};

/// c_{n,alpha} sum m_k |x - a_k|^{alpha-n}; +infinity when x is an atom of positive mass.
double potential_of_measure(const AtomicMeasure& mu, double alpha, const Point& x);

/// max over atom-centred balls and dyadic radii 2^k, k in [-k_range, k_range], of
/// r^{alpha-n} mu(B(a, r)). A lattice lower approximation of the (n-alpha) strength.
double measure_strength(const AtomicMeasure& mu, double alpha, int k_range = 10);

}  // namespace fracgrad
