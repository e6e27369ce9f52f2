#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fracgrad {

namespace {

constexpr double kPi = std::numbers::pi;

LogValue lg(double x) { return log_gamma(x); }
LogValue lpow(double base, double e) { return {e * std::log(base), 1}; }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_order(double s, const char* who) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError(std::string(who) + ": s must lie in (0,1), got " + fmt(s));
}

void require_dim(int n, const char* who) {
    if (n < 1) throw DomainError(std::string(who) + ": dimension must be >= 1");
}

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Critical: return "critical";
        case Regime::Supercritical: return "supercritical";
    }
    return "?";
}

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

Regime classify_regime(int n, double order, double p) {
    const double d = order * p - n;
    if (std::fabs(d) <= kCriticalTolerance * n) return Regime::Critical;
    return d < 0 ? Regime::Subcritical : Regime::Supercritical;
}

void FracParams::validate() const {
    require_dim(n, "FracParams");
    if (s) require_order(*s, "FracParams");
    if (p && !(*p >= 1.0 && std::isfinite(*p))) throw DomainError("FracParams: p must be finite and >= 1");
    if (alpha && !(*alpha > 0.0 && *alpha < n)) throw DomainError("FracParams: alpha must lie in (0, n)");
    if (kappa && !(*kappa > 0.0 && *kappa <= n)) throw DomainError("FracParams: kappa must lie in (0, n]");
}

Regime FracParams::regime_s() const {
    if (!s || !p) throw DomainError("FracParams::regime_s: s and p must be set");
    return classify_regime(n, *s, *p);
}

Regime FracParams::regime_alpha() const {
    if (!alpha || !p) throw DomainError("FracParams::regime_alpha: alpha and p must be set");
    return classify_regime(n, *alpha, *p);
}

double sphere_area(int n) {
    require_dim(n, "sphere_area");
    return 2.0 * std::pow(kPi, 0.5 * n) / gamma(0.5 * n);
}

double ball_volume(int n, double r) { return sphere_area(n) / n * std::pow(r, n); }

LogValue riesz_normalizer_log(int n, double alpha) {
    require_dim(n, "riesz_normalizer");
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("riesz_normalizer: alpha must lie in (0, n)");
    // Gamma((n-a)/2) / (pi^{n/2} 2^a Gamma(a/2))
    return lg(0.5 * (n - alpha)) / (lpow(kPi, 0.5 * n) * lpow(2.0, alpha) * lg(0.5 * alpha));
}

double riesz_normalizer(int n, double alpha) { return riesz_normalizer_log(n, alpha).value(); }

KernelConstants kernel_constants(int n, double s) {
    require_dim(n, "kernel_constants");
    require_order(s, "kernel_constants");
    const LogValue pi_n2 = lpow(kPi, 0.5 * n);
    KernelConstants k{};
    k.c_ns = (lg(0.5 * (n - s)) / (pi_n2 * lpow(2.0, s) * lg(0.5 * s))).value();
    k.c_ns_plus = (LogValue::from(s) * lpow(2.0, s - 1.0) * lg(0.5 * (n + s)) / (pi_n2 * lg(1.0 - 0.5 * s))).value();
    k.c_ns_minus = (lpow(2.0, s) * lg(0.5 * (n + s + 1.0)) / (pi_n2 * lg(0.5 * (1.0 - s)))).value();
    k.kappa_minus_s = (lg(0.5 * (n - s + 1.0)) / (lpow(2.0, s) * pi_n2 * lg(0.5 * (1.0 + s)))).value();
    return k;
}

LogValue herbst_constant_log(int n, double p, double alpha) {
    require_dim(n, "herbst_constant");
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("herbst_constant: alpha must lie in (0, n)");
    if (!(p > 1.0)) throw RegimeError("herbst_constant: requires p > 1");
    if (classify_regime(n, alpha, p) != Regime::Subcritical)
        throw RegimeError("herbst_constant: requires alpha p < n");
    const double a = n / (2.0 * p);
    const double b = n * (p - 1.0) / (2.0 * p);
    const LogValue num = lpow(2.0, alpha * (p - 1.0) / p) * lpow(kPi, 0.5 * n) * lg(0.5 * alpha) *
                         lg(a - 0.5 * alpha) * lg(b);
    const LogValue den = lg(0.5 * (n - alpha)) * lg(b + 0.5 * alpha) * lg(a);
    return num / den;
}

double herbst_constant(int n, double p, double alpha) { return herbst_constant_log(n, p, alpha).value(); }

LogValue morrey_constant_log(int n, double p, double alpha) {
    require_dim(n, "morrey_constant");
    if (!(alpha > 0.0 && alpha < n)) throw DomainError("morrey_constant: alpha must lie in (0, n)");
    if (!(p > 1.0)) throw RegimeError("morrey_constant: requires p > 1");
    if (classify_regime(n, alpha, p) != Regime::Supercritical)
        throw RegimeError("morrey_constant: requires alpha p > n");
    const double w = sphere_area(n) / n;
    return lpow(w, (n - alpha) / n) * lpow(n * (p - 1.0) / (alpha * p - n), (p - 1.0) / p);
}

double morrey_constant(int n, double p, double alpha) { return morrey_constant_log(n, p, alpha).value(); }

double adams_threshold(int n) { return n / sphere_area(n); }

LogValue twin_constant_log(int n, double p, double s, Sign sign) {
    require_dim(n, "twin_constant");
    require_order(s, "twin_constant");
    if (!(p > 1.0 && std::isfinite(p))) throw DomainError("twin_constant: requires 1 < p < infinity");

    const LogValue pi_n2 = lpow(kPi, 0.5 * n);
    switch (classify_regime(n, s, p)) {
        case Regime::Subcritical: {
            if (!(p < n)) throw RegimeError("twin_constant: subcritical constants require p < n");
            const double a = n / (2.0 * p);
            const double b = n * (p - 1.0) / (2.0 * p);
            if (sign == Sign::Plus)
                return lpow(2.0, -s / p) * lg(a - 0.5 * s) * lg(b) / (lg(b + 0.5 * s) * lg(a));
            return lpow(2.0, 1.0 - s) * LogValue::from(p / (n - p)) * lg(a - 0.5 * s) * lg(b + 0.5) /
                   (lg(b + 0.5 * s) * lg(a - 0.5));
        }
        case Regime::Critical: {
            const LogValue lead = lpow(n / sphere_area(n), (n - s) / n) * pi_n2 * lpow(2.0, s);
            if (sign == Sign::Plus) return lead * lg(0.5 * s) / lg(0.5 * (n - s));
            return lead * lg(0.5 * (s + 1.0)) / lg(0.5 * (n + 1.0 - s));
        }
        case Regime::Supercritical: {
            const KernelConstants k = kernel_constants(n, s);
            const LogValue c = morrey_constant_log(n, p, s);
            return c * LogValue::from(sign == Sign::Plus ? k.c_ns : k.kappa_minus_s);
        }
    }
    throw DomainError("twin_constant: unreachable");
}

double twin_constant(int n, double p, double s, Sign sign) { return twin_constant_log(n, p, s, sign).value(); }

IntegerOrderConstants integer_order_constants(int m, int n, double p) {
    require_dim(n, "integer_order_constants");
    if (!(m > 0 && m < n)) throw DomainError("integer_order_constants: requires 0 < m < n");
    const bool even = (m % 2 == 0);

    IntegerOrderConstants out{};
    const LogValue lead = lpow(n / sphere_area(n), double(n - m) / n) * lpow(kPi, 0.5 * n) * lpow(2.0, m);
    out.beta_0mn = even ? (lead * lg(0.5 * m) / lg(0.5 * (n - m))).value()
                        : (lead * lg(0.5 * (m + 1)) / lg(0.5 * (n + 1 - m))).value();

    const bool sub = p > 1.0 && classify_regime(n, m, p) == Regime::Subcritical && (even || p < n);
    if (sub) {
        const double a = n / (2.0 * p);
        const double b = n * (p - 1.0) / (2.0 * p);
        if (even) {
            out.c_mp_lt_n = (lpow(2.0, -m) * lg(a - 0.5 * m) * lg(b) / (lg(b + 0.5 * m) * lg(a))).value();
        } else {
            out.c_mp_lt_n = (lpow(2.0, 1.0 - m) * LogValue::from(p / (n - p)) * lg(a - 0.5 * m) * lg(b + 0.5) /
                             (lg(b + 0.5 * m) * lg(a - 0.5)))
                                .value();
        }
    }
    return out;
}

}  // namespace fracgrad
