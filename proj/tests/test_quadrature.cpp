#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cesaro/compensated.hpp"
#include "cesaro/quadrature.hpp"

using namespace cesaro;

TEST_CASE("error-free transforms recover the rounding error") {
    double err;
    double s = two_sum(1.0, 1e-30, err);
    CHECK(s == 1.0);
    CHECK(err == 1e-30);

    double p = two_prod(1.0 + std::ldexp(1.0, -30), 1.0 - std::ldexp(1.0, -30), err);
    // exact product is 1 - 2^-60; p + err must represent it exactly
    CHECK(p + err == 1.0 - std::ldexp(1.0, -60));
}

TEST_CASE("Neumaier summation survives magnitude swings") {
    NeumaierSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 2.0);
}

TEST_CASE("double-double arithmetic keeps ~32 digits") {
    DD a(1.0, 1e-20);
    DD b(1.0, -1e-20);
    DD d = a - b;
    CHECK(d.to_double() == doctest::Approx(2e-20).epsilon(1e-14));

    // (1 + eps)^2 = 1 + 2 eps + eps^2 exactly within dd
    const double eps = std::ldexp(1.0, -40);
    DD sq = DD(1.0 + eps) * DD(1.0 + eps);
    DD expect = DD(1.0) + DD(2.0 * eps) + DD(eps) * DD(eps);
    CHECK((sq - expect).to_double() == 0.0);

    DD q = DD(1.0) / DD(3.0);
    DD back = q * DD(3.0);
    CHECK(std::abs((back - DD(1.0)).to_double()) < 1e-31);
}

TEST_CASE("Gauss rules integrate polynomials of degree 2m-1 exactly") {
    for (int order : {10, 20}) {
        const GaussRule& r = gauss_legendre(order);
        REQUIRE(r.nodes.size() == static_cast<std::size_t>(order));
        for (int deg : {0, 3, 2 * order - 1}) {
            double acc = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i)
                acc += r.weights[i] * std::pow(r.nodes[i], deg);
            double exact = (deg % 2 == 1) ? 0.0 : 2.0 / (deg + 1);
            CHECK(acc == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("adaptive integration against closed forms") {
    QuadratureConfig cfg;
    auto r1 = integrate_adaptive([](double t) { return std::exp(-t); }, 0.0, 50.0, cfg);
    CHECK(r1.converged);
    CHECK(r1.value == doctest::Approx(1.0 - std::exp(-50.0)).epsilon(1e-12));

    // oscillatory with exact cancellation
    auto r2 = integrate_adaptive([](double t) { return std::sin(t); }, 0.0, 20.0 * M_PI, cfg);
    CHECK(std::abs(r2.value) <= 1e-10);

    // complex integrand: int_0^1 e^{i pi t} dt = 2i/pi
    auto r3 = integrate_adaptive_c(
        [](double t) {
            return std::complex<double>{std::cos(M_PI * t), std::sin(M_PI * t)};
        },
        0.0, 1.0, cfg);
    CHECK(std::abs(r3.value - std::complex<double>{0.0, 2.0 / M_PI}) <= 1e-12);
}

TEST_CASE("budget exhaustion throws or reports, as requested") {
    QuadratureConfig tiny;
    tiny.max_panels = 3;
    tiny.rel_tol = 1e-15;
    tiny.abs_tol = 1e-18;
    auto hard = [](double t) { return std::sin(100.0 * t) / (1e-3 + t * t); };
    CHECK_THROWS_AS(integrate_adaptive(hard, 0.0, 10.0, tiny), QuadratureError);
    auto soft = integrate_adaptive(hard, 0.0, 10.0, tiny, /*throw_on_fail=*/false);
    CHECK_FALSE(soft.converged);
    CHECK(soft.error_estimate > 0.0);
}

TEST_CASE("repeated runs produce identical bits") {
    QuadratureConfig cfg;
    auto f = [](double t) { return std::cos(7.0 * t) * std::exp(-0.3 * t); };
    auto a = integrate_adaptive(f, 0.0, 30.0, cfg);
    auto b = integrate_adaptive(f, 0.0, 30.0, cfg);
    CHECK(a.value == b.value);
    CHECK(a.panels == b.panels);
}

TEST_CASE("gamma tail cutoff certifies the discarded mass") {
    QuadratureConfig cfg;
    for (double shape : {1.0, 4.0, 64.0, 900.0}) {
        double T = gamma_tail_cutoff(shape, 1e-12);
        // numerically integrate the density beyond T up to a far horizon
        auto tail = integrate_adaptive(
            [shape](double t) { return gamma_weight(shape, t); }, T,
            T + 40.0 * std::sqrt(shape) + 60.0, cfg);
        CHECK(tail.value <= 1e-12);
        CHECK(tail.value >= 0.0);
    }
}

TEST_CASE("regularized lower gamma mass at integer shapes") {
    CHECK(gamma_lower_mass(1, 2.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
    CHECK(gamma_lower_mass(2, 3.0) ==
          doctest::Approx(1.0 - std::exp(-3.0) * 4.0).epsilon(1e-13));
    CHECK(gamma_lower_mass(5, 0.0) == 0.0);
    // far tails saturate cleanly in either direction
    CHECK(gamma_lower_mass(1024, 100.0) == doctest::Approx(0.0));
    CHECK(gamma_lower_mass(4, 5000.0) == doctest::Approx(1.0));
}

TEST_CASE("config validation") {
    QuadratureConfig bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadratureConfig{};
    bad.max_panels = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadratureConfig{};
    bad.tail_mass_tol = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
