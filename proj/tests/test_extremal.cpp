#include <doctest.h>

#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/extremal.hpp"

#include <cmath>
#include <numbers>

using namespace fracgrad;
using doctest::Approx;

TEST_CASE("power cutoff closed forms") {
    // n = 1, beta = -1/4, p = 2: integral over (-1, 1) of |x|^{-1/2} = 4
    CHECK(power_cutoff_lp_norm(1, 2.0, -0.25, 1.0) == Approx(2.0).epsilon(1e-15));
    CHECK(power_cutoff_lp_norm(2, 1.0, 0.0, 0.5) == Approx(std::numbers::pi * 0.25).epsilon(1e-15));
    // n = 1, alpha = 1/2, beta = 0: integral of |y|^{-1/2} over (-r0, r0) = 4 sqrt(r0)
    CHECK(power_cutoff_potential_center(1, 0.5, 0.0, 4.0) == Approx(8.0).epsilon(1e-15));
    CHECK_THROWS(power_cutoff_lp_norm(1, 2.0, -0.5, 1.0));
}

TEST_CASE("h profile maximizer") {
    const int n = 2;
    const double p = 3.0, alpha = 1.0;
    CHECK(h_argmax(n, p, alpha) == -0.5);
    CHECK(h_sup(n, p, alpha) == Approx(4.0).epsilon(1e-15));
    const double beta = golden_section_maximize([&](double b) { return h_profile(n, p, alpha, b); }, -n / p + 1e-9, 5.0);
    CHECK(std::fabs(beta - h_argmax(n, p, alpha)) < 1e-6);
    CHECK(h_profile(n, p, alpha, beta) == Approx(h_sup(n, p, alpha)).epsilon(1e-12));
}

TEST_CASE("golden section on a parabola") {
    const double x = golden_section_maximize([](double t) { return -(t - 0.3) * (t - 0.3); }, -1.0, 2.0);
    CHECK(x == Approx(0.3).epsilon(1e-8));
}

TEST_CASE("extremal ratio equals the sharp constant and ignores the radius") {
    CHECK(extremal_ratio(2, 3.0, 1.0) == Approx(std::sqrt(std::numbers::pi) * std::pow(4.0, 2.0 / 3.0)).epsilon(1e-14));
    CHECK(extremal_ratio(3, 2.5, 1.5, 0.1) == Approx(extremal_ratio(3, 2.5, 1.5, 7.0)).epsilon(1e-13));
    CHECK_THROWS_AS(extremal_ratio(2, 1.5, 1.0), RegimeError);
}

TEST_CASE("log cutoff") {
    const int n = 2;
    const double s = 0.5, r = 1e-3;
    const double denom = (1.0 - s) * sphere_area(n) * std::log(1.0 / r);
    CHECK(log_cutoff_eval(n, s, r, 0.5) == Approx(std::pow(0.5, 1.0 - s) / denom).epsilon(1e-15));
    CHECK(log_cutoff_eval(n, s, r, 1e-4) == 0.0);
    CHECK(log_cutoff_eval(n, s, r, 1.5) == 0.0);
    CHECK(log_cutoff_grad_norm(n, s, r) ==
          Approx(std::pow(sphere_area(n) * std::log(1.0 / r), (s - n) / n)).epsilon(1e-15));
}

TEST_CASE("blowup exponent changes sign at the threshold") {
    for (auto [n, s] : {std::pair{2, 0.5}, std::pair{3, 0.3}, std::pair{1, 0.7}}) {
        const double kc = twin_constant(n, n / s, s, Sign::Minus);
        CHECK(std::fabs(moser_blowup_exponent(n, s, kc, 0.0)) < 1e-12);
        CHECK(moser_blowup_exponent(n, s, 0.9 * kc, 0.0) > 0.0);
        CHECK(moser_blowup_exponent(n, s, 1.1 * kc, 0.0) < 0.0);
        CHECK(moser_blowup_lower_bound(n, s, kc, 1e-6, 0.0) == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("gradient cutoff family attains the supercritical gradient constant") {
    const int n = 2;
    const double p = 6.0, s = 0.5;
    const double beta = -(n - s) / (p - 1.0);
    const GradientCutoff gc = gradient_cutoff_family(n, p, s, beta, 0.7);
    CHECK(gc.beta == beta);
    CHECK(gc.ratio == Approx(twin_constant(n, p, s, Sign::Minus)).epsilon(1e-12));
    const GradientCutoff off = gradient_cutoff_family(n, p, s, beta + 0.2, 0.7);
    CHECK(off.ratio < gc.ratio);
}
