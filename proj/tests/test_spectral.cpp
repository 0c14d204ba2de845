#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cesaro/spectral.hpp"

using namespace cesaro;

namespace {

/// Dense-matrix oracle: row sums of C^n(I-C) at size N by plain matmuls.
std::vector<double> dense_row_sums(std::size_t n, std::size_t N) {
    auto matmul = [N](const std::vector<double>& A, const std::vector<double>& B) {
        std::vector<double> C(N * N, 0.0);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                double a = A[i * N + k];
                if (a == 0.0) continue;
                for (std::size_t j = 0; j < N; ++j) C[i * N + j] += a * B[k * N + j];
            }
        return C;
    };
    std::vector<double> C(N * N, 0.0), M(N * N, 0.0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j <= i; ++j) C[i * N + j] = 1.0 / (i + 1.0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            M[i * N + j] = (i == j ? 1.0 : 0.0) - C[i * N + j];
    for (std::size_t p = 0; p < n; ++p) M = matmul(C, M);
    std::vector<double> sums(N, 0.0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) sums[i] += std::abs(M[i * N + j]);
    return sums;
}

}  // namespace

TEST_CASE("spectrum classification against the disc |z - 1/2| <= 1/2") {
    auto b = spectrum_classify(Cplx{1.0, 0.0});
    CHECK(b.location == SpectrumLocation::boundary);
    CHECK(b.distance_to_boundary == 0.0);

    auto i = spectrum_classify(Cplx{0.5, 0.0});
    CHECK(i.location == SpectrumLocation::interior);
    CHECK(i.distance_to_boundary == doctest::Approx(0.5));

    auto e = spectrum_classify(Cplx{2.0, 0.0});
    CHECK(e.location == SpectrumLocation::exterior);
    CHECK(e.distance_to_boundary == doctest::Approx(1.0));

    CHECK(spectrum_classify(Cplx{0.5, 0.5}).location == SpectrumLocation::boundary);
}

TEST_CASE("boundary classification tolerance is 1e-12") {
    CHECK(spectrum_classify(Cplx{1.0 + 0.9e-12, 0.0}).location == SpectrumLocation::boundary);
    CHECK(spectrum_classify(Cplx{1.0 + 1e-11, 0.0}).location == SpectrumLocation::exterior);
    CHECK(spectrum_classify(Cplx{1.0 - 1e-11, 0.0}).location == SpectrumLocation::interior);
}

TEST_CASE("resolvent lower bound values and the theta^2 inequality") {
    CHECK(resolvent_lower_bound(M_PI) == doctest::Approx(0.5));
    CHECK(resolvent_lower_bound(M_PI / 2.0) == doctest::Approx(1.0));
    for (int i = 1; i <= 64; ++i) {
        double theta = M_PI * i / 64.0;
        CHECK(resolvent_lower_bound(theta) >= 2.0 / (theta * theta) - 1e-12);
    }
    CHECK_THROWS_AS(resolvent_lower_bound(0.0), std::invalid_argument);
}

TEST_CASE("finite-section hand values") {
    auto v0 = finite_section_kt_norm(0, 4);
    CHECK(v0.value == doctest::Approx(1.5));  // max_k 2k/(k+1) at k = 3
    CHECK(v0.argmax_index == 3);

    auto v1 = finite_section_kt_norm(1, 2);
    CHECK(v1.value == doctest::Approx(0.5));  // C(I-C) = [[0,0],[-1/4,1/4]]
}

TEST_CASE("transpose iteration matches the dense-matrix oracle") {
    const std::size_t N = 24;
    KtNormOptions full;
    full.full_sweep = true;
    for (std::size_t n : {0u, 1u, 2u, 5u}) {
        auto sums = dense_row_sums(n, N);
        double best = -1.0;
        for (double s : sums) best = std::max(best, s);
        auto est = finite_section_kt_norm(n, N, full);
        CHECK(est.value == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("norm bound 2 from power-boundedness") {
    for (std::size_t n : {0u, 1u, 3u, 8u, 16u})
        CHECK(finite_section_kt_norm(n, 512).value <= 2.0 + 1e-12);
}

TEST_CASE("subsampled sweep with refinement matches the full sweep here") {
    KtNormOptions full;
    full.full_sweep = true;
    auto a = finite_section_kt_norm(8, 512);
    auto b = finite_section_kt_norm(8, 512, full);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
}

TEST_CASE("scaled values sit in the expected band in the resolvable regime") {
    // the finite section resolves the decay only while n <~ log2(N); in that
    // regime sqrt(n) * value is O(1)
    auto table = kt_decay_table({1, 2, 4, 8}, 1024);
    for (const auto& r : table) {
        CHECK(r.sqrt_scaled > 0.05);
        CHECK(r.sqrt_scaled < 10.0);
        CHECK(r.boundary_saturated);  // argmax rides the truncation edge
    }
    CHECK(table[0].value == doctest::Approx(0.7351420).epsilon(1e-5));
}

TEST_CASE("kt_decay_table columns and edge cases") {
    auto t = kt_decay_table({0}, 4);
    REQUIRE(t.size() == 1);
    CHECK(t[0].value == doctest::Approx(1.5));
    CHECK(std::isnan(t[0].log_comparison));

    auto t2 = kt_decay_table({1, 4}, 64);
    CHECK(t2[1].log_comparison ==
          doctest::Approx(std::sqrt(std::log(4.0)) / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(kt_decay_table({4, 2}, 64), std::invalid_argument);
    CHECK_THROWS_AS(kt_decay_table({}, 64), std::invalid_argument);
    CHECK_THROWS_AS(kt_decay_table({1}, 1), std::invalid_argument);
}

TEST_CASE("row values are exact and independent of truncation") {
    // single rows carry no N at all; they must match the dense oracle rows
    auto sums5 = dense_row_sums(3, 24);
    auto row = kt_row_abs_sums(17, {3});
    CHECK(row[0] == doctest::Approx(sums5[17]).epsilon(1e-12));
    // and checkpointing along one iteration equals fresh runs per power
    auto chk = kt_row_abs_sums(9, {1, 2, 5});
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t n = (i == 0) ? 1 : (i == 1) ? 2 : 5;
        CHECK(chk[i] == kt_row_abs_sums(9, {n})[0]);
    }
}

TEST_CASE("monotone lower bounds in N") {
    KtNormOptions full;
    full.full_sweep = true;
    for (std::size_t n : {1u, 4u, 8u}) {
        double vN = finite_section_kt_norm(n, 256, full).value;
        double v2N = finite_section_kt_norm(n, 512, full).value;
        CHECK(v2N >= vN - 1e-12);
    }
}

TEST_CASE("thread count does not change the result bits") {
    KtNormOptions one;
    one.threads = 1;
    KtNormOptions four;
    four.threads = 4;
    auto a = finite_section_kt_norm(6, 512, one);
    auto b = finite_section_kt_norm(6, 512, four);
    CHECK(a.value == b.value);
    CHECK(a.argmax_index == b.argmax_index);
}
