#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"

#include <cmath>
#include <numbers>

namespace fracgrad {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 607/128 (15 terms).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
    double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
    if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double lanczos_series(double z) {
    double sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
    return sum;
}

}  // namespace

double LogValue::value() const { return sign * std::exp(log_abs); }

LogValue LogValue::from(double v) {
    if (v == 0.0) return {-INFINITY, 1};
    return {std::log(std::fabs(v)), v < 0 ? -1 : 1};
}

LogValue LogValue::pow(double e) const {
    if (sign < 0) {
        if (e != std::floor(e)) throw DomainError("LogValue::pow: negative base with fractional exponent");
        const long k = static_cast<long>(e);
        return {log_abs * e, (k % 2 == 0) ? 1 : -1};
    }
    return {log_abs * e, 1};
}

double gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
    if (is_pole(x)) throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
    if (x < 0.5) return kPi / (sin_pi(x) * gamma(1.0 - x));
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_series(z);
}

LogValue log_gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
    if (is_pole(x)) throw DomainError("log_gamma: pole at non-positive integer " + std::to_string(x));
    if (x < 0.5) {
        const double sp = sin_pi(x);
        const LogValue rest = log_gamma(1.0 - x);
        return {std::log(kPi) - std::log(std::fabs(sp)) - rest.log_abs, (sp < 0 ? -1 : 1) * rest.sign};
    }
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return {0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z)), 1};
}

double upper_incomplete_gamma(double a, double x) {
    if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be positive");
    if (x < a + 1.0) {
        if (a > 0.0) {
            // Series for the lower function: gamma(a,x) = x^a e^-x sum x^k / (a (a+1) ... (a+k)).
            double term = 1.0 / a, sum = term;
            for (int k = 1; k < 1000; ++k) {
                term *= x / (a + k);
                sum += term;
                if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
            }
            return gamma(a) - sum * std::exp(-x + a * std::log(x));
        }
        // Recurrence Gamma(a, x) = (Gamma(a + 1, x) - x^a e^-x) / a for a <= 0.
        if (a == 0.0) throw DomainError("upper_incomplete_gamma: a = 0 with small x not supported");
        return (upper_incomplete_gamma(a + 1.0, x) - std::exp(-x + a * std::log(x))) / a;
    }
    // Legendre continued fraction, modified Lentz.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

double lattice_zeta(int n, double g, const std::array<double, 3>& shift) {
    if (n < 1 || n > 3) throw DomainError("lattice_zeta: dimension must be 1, 2 or 3");
    if (std::fabs(g - n) < 1e-14) throw DomainError("lattice_zeta: pole at gamma = n");
    if (g <= 0.0 && g == std::floor(0.5 * g) * 2.0)
        throw DomainError("lattice_zeta: gamma must not be a non-positive even integer");

    std::array<double, 3> c{0.0, 0.0, 0.0};
    bool shifted = false;
    for (int d = 0; d < n; ++d) {
        c[d] = shift[d] - std::round(shift[d]);
        if (c[d] != 0.0) shifted = true;
    }

    // Terms decay like exp(-pi |k|^2); |k| <= 5 leaves < 1e-30.
    constexpr int K = 5;
    const int kx = K, ky = n > 1 ? K : 0, kz = n > 2 ? K : 0;
    const double a_direct = 0.5 * g;
    const double a_dual = 0.5 * (n - g);

    double direct = 0.0, dual = 0.0;
    for (int i = -kx; i <= kx; ++i)
        for (int j = -ky; j <= ky; ++j)
            for (int l = -kz; l <= kz; ++l) {
                const double v0 = i + c[0], v1 = j + c[1], v2 = l + c[2];
                const double r2 = v0 * v0 + v1 * v1 + v2 * v2;
                if (r2 > 0.0) {
                    const double x = kPi * r2;
                    direct += upper_incomplete_gamma(a_direct, x) * std::pow(x, -a_direct);
                }
                const double m2 = double(i) * i + double(j) * j + double(l) * l;
                if (m2 > 0.0) {
                    const double x = kPi * m2;
                    const double phase = std::cos(2.0 * kPi * (i * c[0] + j * c[1] + l * c[2]));
                    dual += phase * upper_incomplete_gamma(a_dual, x) * std::pow(x, -a_dual);
                }
            }
    double bracket = direct + dual + 2.0 / (g - n);
    if (!shifted) bracket -= 2.0 / g;
    const LogValue pre = LogValue{0.5 * g * std::log(kPi), 1} / log_gamma(0.5 * g);
    return pre.value() * bracket;
}

double riemann_zeta(double x) {
    if (x == 1.0) throw DomainError("riemann_zeta: pole at 1");
    return 0.5 * lattice_zeta(1, x);
}

}  // namespace fracgrad
