#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cesaro/laguerre.hpp"
#include "oracle_rational.hpp"

using namespace cesaro;

TEST_CASE("low-degree closed forms") {
    for (double t : {0.0, 0.3, 1.0, 7.5, 40.0}) {
        CHECK(laguerre_eval(0, t) == doctest::Approx(1.0));
        CHECK(laguerre_eval(1, t) == doctest::Approx(2.0 - t));
        CHECK(laguerre_eval(2, t) == doctest::Approx(3.0 - 3.0 * t + 0.5 * t * t));
    }
}

TEST_CASE("value at zero is n+1, exactly") {
    for (int n = 0; n <= 60; ++n) CHECK(laguerre_eval(n, 0.0) == static_cast<double>(n + 1));
}

TEST_CASE("recurrence matches the exact-rational direct sum") {
    using oracle::Rational;
    for (int n = 0; n <= 20; ++n) {
        for (double t : {0.0, 0.5, 1.0, 2.0, 5.0, 12.5, 50.0, 100.75, 200.0}) {
            Rational rt(t);  // t chosen dyadic so the conversion is exact
            double exact = oracle::to_double(oracle::laguerre_direct(n, rt));
            double got = laguerre_eval(n, t);
            double scale = std::max(1.0, std::abs(exact));
            CHECK(std::abs(got - exact) / scale <= 1e-12);
        }
    }
}

TEST_CASE("sign is (-1)^n beyond the Szego interval") {
    for (int n = 1; n <= 60; n += 3) {
        const double lo = 4.0 * (n + 1) + 1.0;
        for (double t : {lo, lo * 1.5, lo * 3.0}) {
            double v = laguerre_eval(n, t);
            CHECK((n % 2 == 0 ? v > 0.0 : v < 0.0));
        }
    }
}

TEST_CASE("the graded scan finds all n roots") {
    for (int n : {1, 2, 5, 10, 25, 40, 60}) {
        auto roots = laguerre_roots(n);
        CHECK(roots.size() == static_cast<std::size_t>(n));
        for (double r : roots) {
            CHECK(r > 0.0);
            CHECK(r < 4.0 * (n + 1));
            // position accuracy: a sign change straddles the reported root
            const double d = 1e-10 * (1.0 + r);
            CHECK(laguerre_eval(n, r - d) * laguerre_eval(n, r + d) <= 0.0);
        }
    }
}

TEST_CASE("signed integral closed form at n = 0 and 1") {
    for (double a : {0.1, 0.25, 0.4}) {
        CHECK(laguerre_signed_integral(0, a) == doctest::Approx(1.0 / a));
        CHECK(laguerre_signed_integral(1, a) == doctest::Approx((1.0 - 2.0 * a) / (a * a)));
    }
}

TEST_CASE("signed integral: closed form vs quadrature oracle") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-14;
    for (double a : {0.1, 0.25, 0.4}) {
        for (int n = 0; n <= 30; n += (n < 6 ? 1 : 3)) {
            const double t_end =
                gamma_tail_cutoff(n + 1.0, 1e-18 * std::pow(1.0 - a, n + 1.0)) / a;
            auto q = integrate_adaptive(
                [n, a](double t) {
                    double s = std::exp(-a * t) * laguerre_eval(n, t);
                    return (n % 2 == 0) ? s : -s;
                },
                0.0, t_end, cfg);
            double closed = laguerre_signed_integral(n, a);
            CHECK(std::abs(q.value - closed) / std::abs(closed) <= 1e-9);
        }
    }
}

TEST_CASE("absolute integral: trivial and piecewise-exact cases") {
    QuadratureConfig cfg;
    for (double a : {0.1, 0.25, 0.4})
        CHECK(laguerre_abs_integral(0, a, cfg) == doctest::Approx(1.0 / a));

    // n = 1, alpha = 1/4: int e^{-t/4}|2-t| dt = 32 e^{-1/2} - 8
    const double exact = 32.0 * std::exp(-0.5) - 8.0;
    CHECK(std::abs(laguerre_abs_integral(1, 0.25, cfg) - exact) / exact <= 1e-9);
}

TEST_CASE("absolute integral splits into head and exact tail") {
    QuadratureConfig cfg;
    auto d = laguerre_abs_integral_detailed(12, 0.25, cfg);
    CHECK(d.head > 0.0);
    CHECK(d.tail > 0.0);
    CHECK(d.value == doctest::Approx(d.head + d.tail));
    CHECK(d.tail_error < cfg.rel_tol * d.value);
}

TEST_CASE("asymptotic ratio approaches 1") {
    QuadratureConfig cfg;
    CHECK(laguerre_asymptotic_ratio(0, 0.25, cfg) == doctest::Approx(4.0 / 3.0));

    // frozen from a 40-digit independent oracle run
    const double r10 = laguerre_asymptotic_ratio(10, 0.25, cfg);
    const double r20 = laguerre_asymptotic_ratio(20, 0.25, cfg);
    const double r40 = laguerre_asymptotic_ratio(40, 0.25, cfg);
    CHECK(r10 == doctest::Approx(1.006921356).epsilon(1e-6));
    CHECK(r20 == doctest::Approx(1.000782174).epsilon(1e-6));
    CHECK(r40 == doctest::Approx(1.000026921).epsilon(1e-6));
    CHECK(std::abs(r40 - 1.0) < std::abs(r20 - 1.0));
    CHECK(std::abs(r20 - 1.0) < std::abs(r10 - 1.0));

    // second alpha: the leftover head fraction shrinks like
    // (alpha e^{2-4 alpha}/(1-alpha))^n, fast at alpha = 0.1
    double prev = 1.0;
    for (int n : {5, 10, 20}) {
        double dev = std::abs(laguerre_asymptotic_ratio(n, 0.1, cfg) - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("the tail cancellation alarm fires when asked for impossible accuracy") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-26;  // below the double-double roundoff floor of the tail
    cfg.abs_tol = 1e-28;
    CHECK_THROWS_AS(laguerre_abs_integral(40, 0.25, cfg), QuadratureError);
}

TEST_CASE("argument validation") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(laguerre_eval(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_eval(3, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_signed_integral(2, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_asymptotic_ratio(2, 0.6, cfg), std::invalid_argument);
}
