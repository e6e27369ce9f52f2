#pragma once

// Special functions and the closed-form constants of the fractional
// Hardy-Rellich / Adams-Moser / Morrey-Sobolev family.

#include <array>
#include <optional>
#include <string>

namespace fracgrad {

/// A real number stored as sign * exp(log_abs).
struct LogValue {
    double log_abs = 0.0;
    int sign = 1;

    double value() const;
    static LogValue from(double v);
    LogValue operator*(const LogValue& o) const { return {log_abs + o.log_abs, sign * o.sign}; }
    LogValue operator/(const LogValue& o) const { return {log_abs - o.log_abs, sign * o.sign}; }
    LogValue pow(double e) const;  // requires sign > 0 unless e is an integer
};

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// Gamma function. Lanczos approximation (g = 607/128, 15 terms), reflection below 0.5.
/// Throws DomainError at the poles 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)| together with the sign of Gamma(x).
LogValue log_gamma(double x);

/// Upper incomplete gamma Gamma(a, x) for x > 0 and any real a.
double upper_incomplete_gamma(double a, double x);

/// Riemann zeta for real x != 1 (x may be negative; evaluated through the lattice sum machinery).
double riemann_zeta(double x);

/// Epstein zeta of a shifted integer lattice,
///   Z(gamma; c) = sum over k in Z^n, k + c != 0, of |k + c|^-gamma,
/// analytically continued to all gamma != n (so it is defined for gamma < n as well).
/// `shift` entries beyond n are ignored. Ewald splitting, converged to ~1e-15.
double lattice_zeta(int n, double gamma, const std::array<double, 3>& shift = {0.0, 0.0, 0.0});

/// Area of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

/// Volume of the ball of radius r in R^n.
double ball_volume(int n, double r);

// ---------------------------------------------------------------------------
// Parameters and regimes
// ---------------------------------------------------------------------------

enum class Regime { Subcritical, Critical, Supercritical };

std::string to_string(Regime r);

/// Relative tolerance used to decide order * p == n.
inline constexpr double kCriticalTolerance = 1e-12;

/// Classify order * p against n: below, at (|order p - n| <= 1e-12 n) or above.
Regime classify_regime(int n, double order, double p);

/// Validated bundle of (n, s, p, alpha, kappa). Unset members are not checked.
struct FracParams {
    int n = 1;
    std::optional<double> s;
    std::optional<double> p;
    std::optional<double> alpha;
    std::optional<double> kappa;

    /// Throws DomainError if any set member violates 0<s<1, p>=1, 0<alpha<n, 0<kappa<=n.
    void validate() const;

    /// Regime of s*p (uses s) or alpha*p (uses alpha). Requires p and the order to be set.
    Regime regime_s() const;
    Regime regime_alpha() const;
};

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

struct KernelConstants {
    double c_ns;           ///< normalizer of the Riesz potential I_s
    double c_ns_plus;      ///< kernel constant of (-Delta)^{s/2}
    double c_ns_minus;     ///< kernel constant of the fractional gradient
    double kappa_minus_s;  ///< kernel constant of div^{-s} nabla = -(-Delta)^{(1-s)/2}
};

KernelConstants kernel_constants(int n, double s);

/// Normalizer c_{n,alpha} of I_alpha = c_{n,alpha} * (unnormalized potential). Valid for 0 < alpha < n.
double riesz_normalizer(int n, double alpha);
LogValue riesz_normalizer_log(int n, double alpha);

/// Weighted-potential constant for alpha p < n, p > 1.
double herbst_constant(int n, double p, double alpha);
LogValue herbst_constant_log(int n, double p, double alpha);

/// Sup-norm potential constant for alpha p > n, p > 1.
double morrey_constant(int n, double p, double alpha);
LogValue morrey_constant_log(int n, double p, double alpha);

/// Adams exponent threshold n / omega_{n-1}.
double adams_threshold(int n);

enum class Sign { Plus, Minus };

std::string to_string(Sign s);

/// Sharp constant for nabla^s_+ (Plus) or nabla^s_- (Minus); the regime follows from s p vs n.
/// Subcritical additionally requires p < n. Critical constants do not depend on p beyond s p = n.
double twin_constant(int n, double p, double s, Sign sign);
LogValue twin_constant_log(int n, double p, double s, Sign sign);

struct IntegerOrderConstants {
    double beta_0mn;
    std::optional<double> c_mp_lt_n;  ///< present only when m p < n, p > 1 (and p < n for odd m)
};

/// Integer-order exponential threshold and Hardy-Rellich constant, even/odd m branches.
IntegerOrderConstants integer_order_constants(int m, int n, double p);

}  // namespace fracgrad
