#ifndef CESARO_ORBIT_HPP
#define CESARO_ORBIT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cesaro/quadrature.hpp"
#include "cesaro/seq.hpp"

namespace cesaro {

struct NormSample {
    std::size_t n = 0;
    double value = 0.0;
    bool boundary_saturated = false;
};

struct NormHistory {
    std::vector<NormSample> samples;
    std::size_t truncation = 0;
};

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    double residual = 0.0;
};

/// ||T^n x - Px|| for each n in the (strictly increasing) schedule,
/// powers by repeated application reusing the previous iterate.
NormHistory orbit_norms(const ConvergentSeq& x, const std::vector<std::size_t>& schedule,
                        SumMode mode = SumMode::automatic);

/// {1, 2, 4, ..., n_max} (n_max rounded down to a power of two is included as-is).
std::vector<std::size_t> dyadic_schedule(std::size_t n_max);

/// Bernstein value sum_j C(k,j) pts_j s^j (1-s)^{k-j} by de Casteljau
/// (repeated convex averaging; stable for large k).
Cplx bernstein_eval(std::span<const Cplx> pts, double s);

/// pi_k(T^n x) via the moment representation
/// (1/Gamma(n)) int_0^inf e^{-t} t^{n-1} G_x^{(k)}(e^{-t}) dt.
Cplx moment_entry(const ConvergentSeq& x, std::size_t k, std::size_t n,
                  const QuadratureConfig& cfg);

/// pi_k(T_alpha^n x) via the shifted-operator representation
/// ((-alpha)/(1-alpha))^n (x_k - int_0^inf e^{-alpha t} L_{n-1}^{(1)}(t)
///                               G_x^{(k)}(e^{-alpha t}) dt).
Cplx talpha_entry(const ConvergentSeq& x, std::size_t k, std::size_t n, double alpha,
                  const QuadratureConfig& cfg);

/// (alpha/(1-alpha))^n (1 + int_0^inf e^{-alpha t} |L_{n-1}^{(1)}(t)| dt),
/// the power-bound certificate for T_alpha, alpha in (0, 1/2).
double talpha_norm_bound(double alpha, std::size_t n, const QuadratureConfig& cfg);

/// Least-squares line through (log n, log value) on samples with
/// n in [n_lo, n_hi] and value > 0 (zeros are excluded).
RateFit fit_rate(const NormHistory& history, std::size_t n_lo, std::size_t n_hi);

}  // namespace cesaro

#endif
