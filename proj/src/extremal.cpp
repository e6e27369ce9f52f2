#include "fracgrad/extremal.hpp"
#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"

#include <cmath>
#include <string>

namespace fracgrad {

namespace {

void require_super(int n, double p, double alpha, const char* who) {
    if (n < 1) throw DomainError(std::string(who) + ": dimension must be >= 1");
    if (!(p > 1.0)) throw DomainError(std::string(who) + ": requires p > 1");
    if (!(alpha > 0.0 && alpha < n)) throw DomainError(std::string(who) + ": alpha must lie in (0, n)");
    if (classify_regime(n, alpha, p) != Regime::Supercritical)
        throw RegimeError(std::string(who) + ": requires alpha p > n");
}

void require_unit_radius(double r, const char* who) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": r must lie in (0,1)");
}

double ball_power(int n, double p, double alpha, double r0) {
    return std::pow(ball_volume(n, r0), (alpha * p - n) / (n * p));
}

}  // namespace

double power_cutoff_lp_norm(int n, double p, double beta, double r0) {
    if (!(p >= 1.0)) throw DomainError("power_cutoff_lp_norm: p must be >= 1");
    if (!(beta * p + n > 0.0)) throw DomainError("power_cutoff_lp_norm: requires beta p + n > 0");
    if (!(r0 > 0.0)) throw DomainError("power_cutoff_lp_norm: r0 must be positive");
    return std::pow(sphere_area(n) / (beta * p + n), 1.0 / p) * std::pow(r0, beta + n / p);
}

double power_cutoff_potential_center(int n, double alpha, double beta, double r0) {
    if (!(alpha + beta > 0.0)) throw DomainError("power_cutoff_potential_center: requires alpha + beta > 0");
    if (!(r0 > 0.0)) throw DomainError("power_cutoff_potential_center: r0 must be positive");
    return sphere_area(n) * std::pow(r0, alpha + beta) / (alpha + beta);
}

double h_profile(int n, double p, double alpha, double beta) {
    require_super(n, p, alpha, "h_profile");
    if (!(beta > -n / p)) throw DomainError("h_profile: requires beta > -n/p");
    return (beta * p + n) / std::pow(alpha + beta, p);
}

double h_argmax(int n, double p, double alpha) {
    require_super(n, p, alpha, "h_argmax");
    return -(n - alpha) / (p - 1.0);
}

double h_sup(int n, double p, double alpha) {
    require_super(n, p, alpha, "h_sup");
    return std::pow((alpha * p - n) / (p - 1.0), 1.0 - p);
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw DomainError("golden_section_maximize: empty interval");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double extremal_ratio(int n, double p, double alpha, double r0) {
    const double beta = h_argmax(n, p, alpha);
    const double potential = power_cutoff_potential_center(n, alpha, beta, r0);
    return potential / (ball_power(n, p, alpha, r0) * power_cutoff_lp_norm(n, p, beta, r0));
}

double log_cutoff_grad_norm(int n, double s, double r) {
    require_unit_radius(r, "log_cutoff_grad_norm");
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("log_cutoff_grad_norm: s must lie in (0,1]");
    return std::pow(sphere_area(n) * std::log(1.0 / r), (s - n) / n);
}

double log_cutoff_eval(int n, double s, double r, double radius) {
    require_unit_radius(r, "log_cutoff_eval");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("log_cutoff_eval: s must lie in (0,1)");
    if (radius < r || radius >= 1.0) return 0.0;
    return std::pow(radius, 1.0 - s) / ((1.0 - s) * sphere_area(n) * std::log(1.0 / r));
}

double moser_blowup_exponent(int n, double s, double kappa, double eps) {
    if (!(kappa > 0.0)) throw DomainError("moser_blowup_exponent: kappa must be positive");
    if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("moser_blowup_exponent: eps must lie in [0,1)");
    const double k_minus = kernel_constants(n, s).kappa_minus_s;
    return n - sphere_area(n) * std::pow(kappa * k_minus * (1.0 - eps), n / (n - s));
}

double moser_blowup_lower_bound(int n, double s, double kappa, double r, double eps) {
    require_unit_radius(r, "moser_blowup_lower_bound");
    if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("moser_blowup_lower_bound: eps must lie in [0,1)");
    return std::pow(r, moser_blowup_exponent(n, s, kappa, eps));
}

GradientCutoff gradient_cutoff_family(int n, double p, double s, double beta, double r0) {
    require_super(n, p, s, "gradient_cutoff_family");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("gradient_cutoff_family: s must lie in (0,1)");
    if (!(beta + s > 0.0) || !(beta * p + n > 0.0))
        throw DomainError("gradient_cutoff_family: requires beta + s > 0 and beta p + n > 0");
    GradientCutoff out{};
    out.beta = beta;
    out.grad_norm = power_cutoff_lp_norm(n, p, beta, r0);
    out.center_value = kernel_constants(n, s).kappa_minus_s * power_cutoff_potential_center(n, s, beta, r0);
    out.ratio = out.center_value / (ball_power(n, p, s, r0) * out.grad_norm);
    return out;
}

}  // namespace fracgrad
