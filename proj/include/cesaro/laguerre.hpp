#ifndef CESARO_LAGUERRE_HPP
#define CESARO_LAGUERRE_HPP

#include "cesaro/quadrature.hpp"

namespace cesaro {

/// L_n^{(1)}(t) by the three-term recurrence in the degree.
double laguerre_eval(int n, double t);

/// Closed form ((1-alpha)/alpha)^{n+1} + (-1)^n for
/// int_0^inf e^{-alpha t} (-1)^n L_n^{(1)}(t) dt.
double laguerre_signed_integral(int n, double alpha);

struct AbsIntegralDetail {
    double value = 0.0;
    double head = 0.0;           // [0, 4(n+1)], adaptive per sign piece
    double tail = 0.0;           // [4(n+1), inf), exact incomplete-gamma sum
    double tail_error = 0.0;     // double-double roundoff estimate of the tail
    int panels = 0;
};

/// int_0^inf e^{-alpha t} |L_n^{(1)}(t)| dt.  Splits at t* = 4(n+1): all
/// roots of L_n^{(1)} lie below t*, and above it the sign is (-1)^n so the
/// tail reduces to an upper-incomplete-gamma recurrence accumulated in
/// double-double precision (a cancellation alarm fires if the compensated
/// error estimate exceeds cfg.rel_tol).
double laguerre_abs_integral(int n, double alpha, const QuadratureConfig& cfg);
AbsIntegralDetail laguerre_abs_integral_detailed(int n, double alpha,
                                                 const QuadratureConfig& cfg);

/// abs_integral / ((1-alpha)/alpha)^{n+1}; tends to 1 as n grows.
double laguerre_asymptotic_ratio(int n, double alpha, const QuadratureConfig& cfg);

/// Roots of L_n^{(1)} inside (0, 4(n+1)), bracketed by a sign scan on a
/// quadratically graded grid of 8(n+1) cells and refined by bisection.
std::vector<double> laguerre_roots(int n);

}  // namespace cesaro

#endif
