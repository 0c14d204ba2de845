#include "cesaro/laguerre.hpp"

#include <algorithm>
#include <cmath>

#include "cesaro/compensated.hpp"

namespace cesaro {

double laguerre_eval(int n, double t) {
    if (n < 0) throw std::invalid_argument("laguerre_eval: degree must be >= 0");
    if (t < 0.0) throw std::invalid_argument("laguerre_eval: t must be >= 0");
    double p0 = 1.0;            // L_0^{(1)}
    if (n == 0) return p0;
    double p1 = 2.0 - t;        // L_1^{(1)}
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1}^{(1)} = (2k+2-t) L_k^{(1)} - (k+1) L_{k-1}^{(1)}
        double p2 = ((2.0 * k + 2.0 - t) * p1 - (k + 1.0) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double laguerre_signed_integral(int n, double alpha) {
    if (n < 0) throw std::invalid_argument("laguerre_signed_integral: degree must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("laguerre_signed_integral: alpha must lie in (0,1)");
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return std::pow((1.0 - alpha) / alpha, n + 1) + sign;
}

std::vector<double> laguerre_roots(int n) {
    std::vector<double> roots;
    if (n <= 0) return roots;
    const double tstar = 4.0 * (n + 1);
    const int m = 8 * (n + 1);
    // the small roots cluster quadratically; grade the scan accordingly
    double prev_t = 0.0;
    double prev_v = laguerre_eval(n, 0.0);  // = n+1 > 0
    for (int i = 1; i <= m; ++i) {
        double t = tstar * (static_cast<double>(i) / m) * (static_cast<double>(i) / m);
        double v = laguerre_eval(n, t);
        if ((prev_v < 0.0) != (v < 0.0)) {
            double a = prev_t, b = t, fa = prev_v;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (a + b);
                double fm = laguerre_eval(n, mid);
                if ((fa < 0.0) != (fm < 0.0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
                if (b - a < 1e-14 * (1.0 + b)) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_v = v;
    }
    return roots;
}

namespace {

/// Tail sum over [t*, inf): sum_k C(n+1,k+1) (-1)^{n+k}/k! * Gamma(k+1, a t*)/a^{k+1},
/// with Gamma(k+1, x) = e^{-x} R_k, R_k = k R_{k-1} + x^k, all in double-double.
void abs_tail(int n, double alpha, double tstar, const QuadratureConfig& cfg, double& tail,
              double& err_est) {
    const double x = alpha * tstar;
    DD binom(static_cast<double>(n + 1));  // C(n+1, 1)
    DD r(1.0);                             // R_0
    DD xpow(1.0);                          // x^0
    DD kfact(1.0);
    DD apow(alpha);                        // alpha^{k+1}
    DD sum(0.0);
    DD abs_terms(0.0);
    const DD dx(x);
    const DD dalpha(alpha);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            binom = binom * DD(static_cast<double>(n + 1 - k)) / DD(static_cast<double>(k + 1));
            kfact = kfact * DD(static_cast<double>(k));
            xpow = xpow * dx;
            r = DD(static_cast<double>(k)) * r + xpow;
            apow = apow * dalpha;
        }
        DD term = binom * r / (kfact * apow);
        if ((n + k) % 2 != 0) term = -term;
        sum += term;
        abs_terms += abs(term);
    }
    const double expf = std::exp(-x);
    tail = sum.to_double() * expf;
    // dd carries ~31-32 digits; the roundoff floor scales with the largest
    // accumulated magnitude
    double dd_eps = 4.93e-32;
    err_est = abs_terms.to_double() * expf * dd_eps;
    double rel = std::abs(tail) > 0.0 ? err_est / std::abs(tail) : 0.0;
    if (rel > cfg.rel_tol)
        throw QuadratureError(
            "laguerre_abs_integral: cancellation alarm in the incomplete-gamma tail", rel);
}

}  // namespace

AbsIntegralDetail laguerre_abs_integral_detailed(int n, double alpha,
                                                 const QuadratureConfig& cfg) {
    if (n < 0) throw std::invalid_argument("laguerre_abs_integral: degree must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("laguerre_abs_integral: alpha must lie in (0,1)");
    cfg.validate();

    AbsIntegralDetail out;
    const double tstar = 4.0 * (n + 1);

    if (n == 0) {  // |L_0| = 1
        out.head = (1.0 - std::exp(-alpha * tstar)) / alpha;
        out.tail = std::exp(-alpha * tstar) / alpha;
        out.value = 1.0 / alpha;
        return out;
    }

    // the closed-form tail is cheap and carries the cancellation alarm;
    // evaluate it before spending quadrature effort on the head
    abs_tail(n, alpha, tstar, cfg, out.tail, out.tail_error);

    std::vector<double> cuts = laguerre_roots(n);
    cuts.insert(cuts.begin(), 0.0);
    cuts.push_back(tstar);

    NeumaierSum head;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto piece = integrate_adaptive(
            [n, alpha](double t) { return std::exp(-alpha * t) * laguerre_eval(n, t); },
            cuts[i], cuts[i + 1], cfg);
        head.add(std::abs(piece.value));
        out.panels += piece.panels;
    }
    out.head = head.value();
    out.value = out.head + out.tail;
    return out;
}

double laguerre_abs_integral(int n, double alpha, const QuadratureConfig& cfg) {
    return laguerre_abs_integral_detailed(n, alpha, cfg).value;
}

double laguerre_asymptotic_ratio(int n, double alpha, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("laguerre_asymptotic_ratio: alpha must lie in (0,1/2)");
    return laguerre_abs_integral(n, alpha, cfg) / std::pow((1.0 - alpha) / alpha, n + 1);
}

}  // namespace cesaro
