#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cesaro/orbit.hpp"
#include "oracle_rational.hpp"

using namespace cesaro;

namespace {

ConvergentSeq random_real_seq(std::mt19937_64& rng, std::size_t n, double limit = 0.0) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<Cplx> p(n);
    for (auto& v : p) v = Cplx{uni(rng), 0.0};
    return ConvergentSeq(std::move(p), Cplx{limit, 0.0});
}

ConvergentSeq power(ConvergentSeq x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x = cesaro_apply(x);
    return x;
}

}  // namespace

TEST_CASE("orbit of the fixed point is identically zero") {
    auto hist = orbit_norms(ConvergentSeq::ones(64), {1, 2, 4, 8});
    for (const auto& s : hist.samples) CHECK(s.value == 0.0);
}

TEST_CASE("schedules may start at n = 0") {
    std::mt19937_64 rng(2);
    auto x = random_real_seq(rng, 32);
    auto hist = orbit_norms(x, {0, 1, 2});
    CHECK(hist.samples[0].n == 0);
    CHECK(hist.samples[0].value ==
          doctest::Approx(sup_distance(x, project_P(x)).value));
    CHECK_THROWS_AS(orbit_norms(x, {2, 1}), std::invalid_argument);
}

TEST_CASE("orbit values match the exact-rational oracle (N <= 8, n <= 4)") {
    using oracle::Rational;
    // x = (0,1,1,...,1), limit 1
    std::vector<Cplx> p(8, Cplx{1.0, 0.0});
    p[0] = Cplx{0.0, 0.0};
    ConvergentSeq x(std::move(p), Cplx{1.0, 0.0});
    auto hist = orbit_norms(x, {1, 2, 4});

    std::vector<Rational> rx(8, Rational(1));
    rx[0] = 0;
    for (std::size_t i = 0; i < hist.samples.size(); ++i) {
        const auto& s = hist.samples[i];
        auto rp = oracle::cesaro_power(rx, static_cast<unsigned>(s.n));
        // P x = pi_0(x) e_inf = 0; limit term |1 - 0| = 1
        Rational best = 1;  // the limit difference
        for (const auto& v : rp)
            if (abs(v) > best) best = abs(v);
        CHECK(s.value == doctest::Approx(oracle::to_double(best)).epsilon(1e-14));
        CHECK(s.value > 0.0);
    }
}

TEST_CASE("orbit norms dominate the fixed limit-difference term") {
    std::mt19937_64 rng(3);
    auto x = random_real_seq(rng, 128, 0.75);
    const double gap = std::abs(x.limit() - x[0]);
    auto hist = orbit_norms(x, {1, 2, 4, 8, 16});
    for (const auto& s : hist.samples) CHECK(s.value >= gap - 1e-15);
}

TEST_CASE("semigroup consistency on truncations") {
    std::mt19937_64 rng(5);
    auto x = random_real_seq(rng, 256);
    for (std::size_t m : {1u, 3u}) {
        for (std::size_t n : {2u, 5u}) {
            auto a = power(x, m + n);
            auto b = power(power(x, n), m);
            CHECK(sup_distance(a, b).value <= 1e-12);
        }
    }
}

TEST_CASE("moment_entry: k = 0 gives x_0, e_inf gives 1") {
    QuadratureConfig cfg;
    std::mt19937_64 rng(7);
    auto x = random_real_seq(rng, 40);
    for (std::size_t n : {1u, 4u, 9u})
        CHECK(std::abs(moment_entry(x, 0, n, cfg) - x[0]) <= 1e-9);

    auto e = ConvergentSeq::ones(40);
    for (std::size_t k : {0u, 7u, 20u})
        for (std::size_t n : {1u, 6u})
            CHECK(std::abs(moment_entry(e, k, n, cfg) - Cplx{1.0, 0.0}) <= 1e-9);
}

TEST_CASE("moment_entry agrees with direct iteration") {
    QuadratureConfig cfg;
    std::mt19937_64 rng(11);
    auto x = random_real_seq(rng, 40);
    for (std::size_t n : {1u, 3u, 7u, 10u}) {
        auto tn = power(x, n);
        for (std::size_t k : {0u, 3u, 11u, 20u}) {
            CHECK(std::abs(moment_entry(x, k, n, cfg) - tn[k]) <= 1e-8);
        }
    }
}

TEST_CASE("talpha_entry: n = 1 matches the direct shifted-operator formula") {
    QuadratureConfig cfg;
    std::mt19937_64 rng(13);
    auto x = random_real_seq(rng, 24);
    for (double alpha : {0.1, 0.25, 0.4}) {
        auto tx = cesaro_apply(x);
        for (std::size_t k : {0u, 5u, 15u}) {
            Cplx direct = (tx[k] - alpha * x[k]) / (1.0 - alpha);
            CHECK(std::abs(talpha_entry(x, k, 1, alpha, cfg) - direct) <= 1e-9);
        }
    }
}

TEST_CASE("talpha_entry: e_inf is fixed after normalization") {
    QuadratureConfig cfg;
    auto e = ConvergentSeq::ones(16);
    for (std::size_t n : {1u, 2u, 5u, 8u})
        CHECK(std::abs(talpha_entry(e, 3, n, 0.25, cfg) - Cplx{1.0, 0.0}) <= 1e-8);
}

TEST_CASE("talpha_entry agrees with the binomial-expansion oracle") {
    QuadratureConfig cfg;
    std::mt19937_64 rng(17);
    auto x = random_real_seq(rng, 24);
    for (double alpha : {0.1, 0.25, 0.4}) {
        std::vector<ConvergentSeq> powers{x};
        for (int j = 1; j <= 8; ++j) powers.push_back(cesaro_apply(powers.back()));
        for (std::size_t n : {1u, 4u, 8u}) {
            for (std::size_t k : {0u, 9u}) {
                Cplx acc{0.0, 0.0};
                for (std::size_t j = 0; j <= n; ++j) {
                    double c = oracle::to_double(
                        oracle::binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
                    acc += c * std::pow(-alpha, static_cast<double>(n - j)) * powers[j][k];
                }
                acc /= std::pow(1.0 - alpha, static_cast<double>(n));
                CHECK(std::abs(talpha_entry(x, k, n, alpha, cfg) - acc) <= 1e-8);
            }
        }
    }
}

TEST_CASE("talpha_norm_bound closed cases") {
    QuadratureConfig cfg;
    for (double a : {0.1, 0.25, 0.4}) {
        // n = 1: (a/(1-a)) (1 + 1/a)
        double expected = (a / (1.0 - a)) * (1.0 + 1.0 / a);
        CHECK(talpha_norm_bound(a, 1, cfg) == doctest::Approx(expected).epsilon(1e-12));
    }
    // alpha = 1/4, n = 2: (1/9)(1 + 32 e^{-1/2} - 8), piecewise-exact tail
    double exact = (32.0 * std::exp(-0.5) - 7.0) / 9.0;
    CHECK(talpha_norm_bound(0.25, 2, cfg) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("talpha_norm_bound stays bounded with no growth") {
    QuadratureConfig cfg;
    double prev = talpha_norm_bound(0.25, 10, cfg);
    for (std::size_t n : {20u, 40u, 60u}) {
        double b = talpha_norm_bound(0.25, n, cfg);
        CHECK(b < 3.0);
        CHECK(b <= prev + 1e-9);
        prev = b;
    }
}

TEST_CASE("fit_rate recovers exact power laws") {
    NormHistory h;
    h.truncation = 0;
    for (std::size_t n = 1; n <= 1024; n *= 2)
        h.samples.push_back({n, 3.7 / std::sqrt(static_cast<double>(n)), false});
    auto f = fit_rate(h, 1, 1024);
    CHECK(f.slope == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(f.residual <= 1e-12);

    NormHistory c;
    for (std::size_t n = 1; n <= 64; n *= 2) c.samples.push_back({n, 2.0, false});
    CHECK(fit_rate(c, 1, 64).slope == doctest::Approx(0.0));

    NormHistory inv;
    for (std::size_t n = 1; n <= 64; n *= 2)
        inv.samples.push_back({n, 5.0 / static_cast<double>(n), false});
    CHECK(fit_rate(inv, 1, 64).slope == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("fit_rate rejects undersized windows and excludes zeros") {
    NormHistory h;
    h.samples.push_back({1, 1.0, false});
    h.samples.push_back({2, 0.5, false});
    CHECK_THROWS_AS(fit_rate(h, 1, 2), std::invalid_argument);

    NormHistory z;
    for (std::size_t n = 1; n <= 16; n *= 2)
        z.samples.push_back({n, n == 4 ? 0.0 : 1.0 / n, false});
    auto f = fit_rate(z, 1, 16);  // zero sample dropped, 4 remain
    CHECK(f.slope == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("quadrature failures surface as explicit errors") {
    QuadratureConfig tiny;
    tiny.max_panels = 2;
    tiny.rel_tol = 1e-14;
    tiny.abs_tol = 1e-16;
    std::mt19937_64 rng(29);
    auto x = random_real_seq(rng, 24);
    CHECK_THROWS_AS(moment_entry(x, 20, 9, tiny), QuadratureError);
}

TEST_CASE("range-constructed sequences keep sqrt(n)-scaled norms bounded") {
    std::mt19937_64 rng(19);
    auto y = random_real_seq(rng, 4096);
    auto x = apply_i_minus_t(y);
    auto hist = orbit_norms(x, dyadic_schedule(1024));
    for (const auto& s : hist.samples) {
        double scaled = std::sqrt(static_cast<double>(s.n)) * s.value;
        CHECK(scaled < 10.0);
    }
}

TEST_CASE("second-order range sequences decay with slope at most -0.85") {
    std::mt19937_64 rng(23);
    auto y = random_real_seq(rng, 10000);
    auto x = apply_i_minus_t(apply_i_minus_t(y));
    auto hist = orbit_norms(x, dyadic_schedule(1024));
    auto fit = fit_rate(hist, 64, 1024);
    CHECK(fit.slope <= -0.85);
}
