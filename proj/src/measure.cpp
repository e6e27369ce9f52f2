#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/fracops.hpp"

#include <cmath>
#include <limits>

namespace fracgrad {

namespace {

double distance(const Point& a, const Point& b, int n) {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(r2);
}

void require_alpha(int n, double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < n)) throw DomainError(std::string(who) + ": alpha must lie in (0, n)");
}

}  // namespace

void AtomicMeasure::validate() const {
    if (n < 1 || n > 3) throw DomainError("AtomicMeasure: dimension must be 1, 2 or 3");
    for (const auto& a : atoms) {
        if (!(a.mass >= 0.0) || !std::isfinite(a.mass)) throw DomainError("AtomicMeasure: masses must be finite and >= 0");
        for (int d = 0; d < n; ++d)
            if (!std::isfinite(a.location[d])) throw DomainError("AtomicMeasure: non-finite atom location");
    }
}

double AtomicMeasure::total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms) m += a.mass;
    return m;
}

double AtomicMeasure::ball_mass(const Point& x, double r) const {
    double m = 0.0;
    for (const auto& a : atoms)
        if (distance(a.location, x, n) < r) m += a.mass;
    return m;
}

double potential_of_measure(const AtomicMeasure& mu, double alpha, const Point& x) {
    mu.validate();
    require_alpha(mu.n, alpha, "potential_of_measure");
    double sum = 0.0;
    for (const auto& a : mu.atoms) {
        if (a.mass == 0.0) continue;
        const double r = distance(a.location, x, mu.n);
        if (r == 0.0) return std::numeric_limits<double>::infinity();
        sum += a.mass * std::pow(r, alpha - mu.n);
    }
    return riesz_normalizer(mu.n, alpha) * sum;
}

double measure_strength(const AtomicMeasure& mu, double alpha, int k_range) {
    mu.validate();
    require_alpha(mu.n, alpha, "measure_strength");
    if (k_range < 0) throw DomainError("measure_strength: k_range must be >= 0");
    double best = 0.0;
    for (const auto& a : mu.atoms)
        for (int k = -k_range; k <= k_range; ++k) {
            const double r = std::ldexp(1.0, k);
            best = std::max(best, std::pow(r, alpha - mu.n) * mu.ball_mass(a.location, r));
        }
    return best;
}

}  // namespace fracgrad
