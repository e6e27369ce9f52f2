#include <doctest.h>

#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <tuple>
#include <utility>

using namespace fracgrad;
using doctest::Approx;

namespace {

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

}  // namespace

// Reference values computed with mpmath at 30 digits.

TEST_CASE("gamma matches high precision values") {
    CHECK(close(fracgrad::gamma(0.25), 3.6256099082219083, 1e-14));
    CHECK(close(fracgrad::gamma(-1.5), 2.3632718012073547, 1e-14));
    CHECK(close(fracgrad::gamma(10.3), 716430.68906237641, 1e-13));
    CHECK(close(fracgrad::gamma(-0.3), -4.3268511088251927, 1e-14));
    CHECK(close(fracgrad::gamma(0.5), std::sqrt(std::numbers::pi), 1e-15));
    CHECK(close(fracgrad::gamma(6.0), 120.0, 1e-14));
}

TEST_CASE("log_gamma keeps large arguments finite") {
    CHECK(close(log_gamma(200.5).log_abs, 860.58220350978249, 1e-14));
    CHECK(log_gamma(200.5).sign == 1);
    CHECK(close(log_gamma(1e-3).log_abs, 6.9071788853838537, 1e-13));
    CHECK(log_gamma(-0.3).sign == -1);
    CHECK(log_gamma(-1.5).sign == 1);
}

TEST_CASE("gamma rejects poles") {
    CHECK_THROWS_AS(fracgrad::gamma(0.0), DomainError);
    CHECK_THROWS_AS(fracgrad::gamma(-2.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-7.0), DomainError);
}

TEST_CASE("gamma recurrence and reflection hold on random arguments") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-6.0, 12.0);
    for (int i = 0; i < 200; ++i) {
        const double x = dist(rng);
        if (std::fabs(x - std::round(x)) < 1e-3 && x < 0.5) continue;
        CHECK(close(fracgrad::gamma(x + 1.0), x * fracgrad::gamma(x), 1e-12));
        const double refl = std::numbers::pi / std::sin(std::numbers::pi * x);
        if (std::fabs(std::sin(std::numbers::pi * x)) > 1e-3) CHECK(close(fracgrad::gamma(x) * fracgrad::gamma(1.0 - x), refl, 1e-11));
    }
}

TEST_CASE("LogValue arithmetic") {
    const LogValue a = LogValue::from(-3.0), b = LogValue::from(0.5);
    CHECK((a * b).value() == Approx(-1.5).epsilon(1e-15));
    CHECK((a / b).value() == Approx(-6.0).epsilon(1e-15));
    CHECK(b.pow(3.0).value() == Approx(0.125).epsilon(1e-15));
}

TEST_CASE("upper incomplete gamma") {
    CHECK(close(upper_incomplete_gamma(-0.5, 2.0), 0.030098757100186466, 1e-12));
    CHECK(close(upper_incomplete_gamma(2.5, 0.3), 1.3133926142981467, 1e-12));
    CHECK(close(upper_incomplete_gamma(0.0, 1.0), 0.21938393439552027, 1e-12));
    CHECK(close(upper_incomplete_gamma(-2.3, 0.7), 0.34551028428841973, 1e-12));
}

TEST_CASE("riemann zeta including the continued range") {
    CHECK(close(riemann_zeta(1.5), 2.6123753486854883, 1e-13));
    CHECK(close(riemann_zeta(3.0), 1.2020569031595943, 1e-13));
    CHECK(close(riemann_zeta(0.5), -1.4603545088095868, 1e-13));
    CHECK(close(riemann_zeta(-0.5), -0.20788622497735457, 1e-12));
    CHECK(close(riemann_zeta(-1.3), -0.043464082954498485, 1e-11));
}

TEST_CASE("lattice zeta") {
    CHECK(close(lattice_zeta(1, 1.5), 5.2247506973709767, 1e-13));
    CHECK(close(lattice_zeta(2, 3.0), 9.0336216831009503, 1e-13));
    CHECK(close(lattice_zeta(2, 2.5), 15.238322944663087, 1e-13));
    CHECK(close(lattice_zeta(2, 1.5), -10.077559478793152, 1e-12));
    CHECK(close(lattice_zeta(1, 2.0, {0.3, 0.0, 0.0}), 15.079413702802342, 1e-13));
}

TEST_CASE("sphere area and ball volume") {
    CHECK(sphere_area(1) == Approx(2.0).epsilon(1e-15));
    CHECK(sphere_area(2) == Approx(2.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(sphere_area(3) == Approx(4.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(ball_volume(3, 2.0) == Approx(32.0 * std::numbers::pi / 3.0).epsilon(1e-15));
    CHECK(close(adams_threshold(3), 0.238732414637843, 1e-14));
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(2, 0.5, 2.0) == Regime::Subcritical);
    CHECK(classify_regime(2, 0.5, 4.0) == Regime::Critical);
    CHECK(classify_regime(2, 0.5, 4.0 + 1e-9) == Regime::Supercritical);
    FracParams bad{.n = 2, .s = 1.2};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    FracParams good{.n = 3, .s = 0.5, .p = 2.0};
    CHECK_NOTHROW(good.validate());
    CHECK(good.regime_s() == Regime::Subcritical);
}

TEST_CASE("kernel constants") {
    CHECK(close(riesz_normalizer(3, 1.0), 0.050660591821168886, 1e-13));
    CHECK(close(riesz_normalizer(2, 0.5), 0.076074279862467703, 1e-13));
    CHECK(close(riesz_normalizer(1, 0.3), 0.18758154036452481, 1e-13));
    const KernelConstants k = kernel_constants(2, 0.5);
    CHECK(close(k.c_ns, 0.076074279862467703, 1e-13));
    CHECK(close(k.c_ns_plus, 0.083241983875425071, 1e-13));
    CHECK(close(k.c_ns_minus, 0.11411141979370157, 1e-13));
    CHECK(close(k.kappa_minus_s, 0.16648396775085012, 1e-13));
    CHECK(close(kernel_constants(3, 0.3).c_ns_plus, 0.026833705757979948, 1e-13));
}

TEST_CASE("potential constants by regime") {
    CHECK(close(morrey_constant(2, 3.0, 1.0), std::sqrt(std::numbers::pi) * std::pow(4.0, 2.0 / 3.0), 1e-14));
    CHECK(close(morrey_constant(3, 2.5, 1.5), 5.9970138920728924, 1e-13));
    CHECK(close(herbst_constant(3, 2.0, 1.0), 55.830913597111036, 1e-13));
    CHECK_THROWS_AS(morrey_constant(2, 1.5, 1.0), RegimeError);
    CHECK_THROWS_AS(herbst_constant(2, 3.0, 1.0), RegimeError);
    CHECK_THROWS_AS(riesz_normalizer(2, 2.0), DomainError);
}

TEST_CASE("twin constants") {
    CHECK(close(twin_constant(3, 2.0, 0.5, Sign::Plus), 1.4904500894290902, 1e-13));
    CHECK(close(twin_constant(3, 2.0, 0.5, Sign::Minus), 1.2533141373155003, 1e-13));
    CHECK(close(twin_constant(2, 4.0, 0.5, Sign::Plus), 5.5705714058666221, 1e-13));
    CHECK(close(twin_constant(2, 4.0, 0.5, Sign::Minus), 2.5454535583748041, 1e-13));
    CHECK_THROWS_AS(twin_constant(2, 3.0, 0.5, Sign::Plus), RegimeError);
    const double sup = twin_constant(2, 6.0, 0.5, Sign::Minus);
    CHECK(close(sup, morrey_constant(2, 6.0, 0.5) * kernel_constants(2, 0.5).kappa_minus_s, 1e-14));
}

TEST_CASE("classical limits of the subcritical gradient constant") {
    CHECK(close(twin_constant(3, 2.0, 1.0 - 1e-6, Sign::Minus), 2.0 / (3.0 - 2.0), 0.01));
    CHECK(close(twin_constant(4, 3.0, 1.0 - 1e-6, Sign::Minus), 3.0 / (4.0 - 3.0), 0.01));
}

TEST_CASE("constants stay finite for large dimension") {
    for (int n : {50, 200}) {
        CHECK(std::isfinite(riesz_normalizer(n, 1.0)));
        CHECK(std::isfinite(morrey_constant(n, 2.0 * n, 1.0)));
        CHECK(riesz_normalizer_log(n, 1.0).value() == Approx(riesz_normalizer(n, 1.0)));
    }
}

TEST_CASE("integer order constants") {
    const IntegerOrderConstants even = integer_order_constants(2, 4, 1.5);
    REQUIRE(even.c_mp_lt_n.has_value());
    CHECK(close(*even.c_mp_lt_n, 9.0 / 8.0, 1e-13));
    const IntegerOrderConstants odd = integer_order_constants(1, 3, 2.0);
    REQUIRE(odd.c_mp_lt_n.has_value());
    CHECK(close(*odd.c_mp_lt_n, 2.0, 1e-13));
    CHECK_FALSE(integer_order_constants(1, 3, 4.0).c_mp_lt_n.has_value());
    CHECK(integer_order_constants(1, 2, 2.0).beta_0mn > 0.0);
}

TEST_CASE("potential constant times normalizer is the derivative constant") {
    for (auto [n, p, s] : {std::tuple{3, 2.0, 0.5}, std::tuple{4, 1.5, 0.9}, std::tuple{2, 1.8, 0.3}}) {
        const double lhs = herbst_constant(n, p, s) * riesz_normalizer(n, s);
        CHECK(close(lhs, twin_constant(n, p, s, Sign::Plus), 1e-12));
    }
}

TEST_CASE("gradient constant converges monotonically to the classical value") {
    for (auto [n, p] : {std::pair{3, 2.0}, std::pair{4, 3.0}, std::pair{5, 2.5}}) {
        double prev = 1e300;
        for (int k = 3; k <= 6; ++k) {
            const double d = std::fabs(twin_constant(n, p, 1.0 - std::pow(10.0, -k), Sign::Minus) - p / (n - p));
            CHECK(d < prev);
            prev = d;
        }
    }
}

TEST_CASE("supercritical constant blows up at the critical exponent") {
    for (auto [n, alpha] : {std::pair{2, 1.0}, std::pair{3, 0.7}}) {
        double prev = 0.0;
        for (int k = 1; k <= 6; ++k) {
            const double c = morrey_constant(n, n / alpha + std::pow(10.0, -k), alpha);
            CHECK(c > prev);
            prev = c;
        }
    }
}
