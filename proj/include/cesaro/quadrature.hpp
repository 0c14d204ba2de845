#ifndef CESARO_QUADRATURE_HPP
#define CESARO_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "cesaro/compensated.hpp"

namespace cesaro {

/// Thrown when an integral cannot be resolved within budget, or when a
/// compensated tail sum trips its cancellation alarm.  Carries the error
/// estimate that was actually achieved.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_panels = 1 << 20;
    double tail_mass_tol = 1e-12;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0) ||
            !(tail_mass_tol > 0.0 && tail_mass_tol < 1.0))
            throw std::invalid_argument("QuadratureConfig: tolerances must lie in (0,1)");
        if (max_panels < 1)
            throw std::invalid_argument("QuadratureConfig: max_panels must be >= 1");
    }
};

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

/// Gauss–Legendre rule of given order, nodes by Newton iteration on the
/// Legendre recurrence; cached per order.
const GaussRule& gauss_legendre(int order);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

struct IntegralResultC {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

namespace detail {

inline double err_norm(double v) { return std::abs(v); }
inline double err_norm(std::complex<double> v) { return std::abs(v.real()) + std::abs(v.imag()); }

template <class Value, class F>
Value panel_value(F&& f, const GaussRule& rule, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    NeumaierSum re, im;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        Value v = f(mid + half * rule.nodes[i]);
        if constexpr (std::is_same_v<Value, double>) {
            re.add(rule.weights[i] * v);
        } else {
            re.add(rule.weights[i] * v.real());
            im.add(rule.weights[i] * v.imag());
        }
    }
    if constexpr (std::is_same_v<Value, double>)
        return half * re.value();
    else
        return Value{half * re.value(), half * im.value()};
}

/// Globally adaptive Gauss quadrature with an embedded lower-order error
/// estimate per segment.  Worst-segment refinement through a lazy max-heap
/// (deterministic: ties in the error estimate break toward the leftmost
/// segment), with periodic exact resummation of the running totals.
template <class Value, class F>
auto integrate_adaptive_impl(F&& f, double a, double b, const QuadratureConfig& cfg,
                             bool throw_on_fail) {
    struct Piece {
        double a, b;
        Value value;
        double err;
    };
    const GaussRule& hi = gauss_legendre(20);
    const GaussRule& lo = gauss_legendre(10);

    auto make_piece = [&](double x0, double x1) {
        Value vh = panel_value<Value>(f, hi, x0, x1);
        Value vl = panel_value<Value>(f, lo, x0, x1);
        return Piece{x0, x1, vh, err_norm(vh - vl)};
    };

    struct HeapEntry {
        double err;
        double a;
        std::size_t idx;
        bool operator<(const HeapEntry& o) const {
            if (err != o.err) return err < o.err;  // max-heap on err
            return a > o.a;                        // ties: leftmost first
        }
    };

    std::vector<Piece> pieces;
    std::priority_queue<HeapEntry> queue;
    pieces.push_back(make_piece(a, b));
    queue.push({pieces[0].err, pieces[0].a, 0});
    int panels = 1;

    auto exact_totals = [&]() {
        NeumaierSum re, im, es;
        for (const Piece& p : pieces) {
            if constexpr (std::is_same_v<Value, double>) {
                re.add(p.value);
            } else {
                re.add(p.value.real());
                im.add(p.value.imag());
            }
            es.add(p.err);
        }
        Value total;
        if constexpr (std::is_same_v<Value, double>)
            total = re.value();
        else
            total = Value{re.value(), im.value()};
        return std::pair<Value, double>(total, es.value());
    };

    auto [total, errsum] = exact_totals();
    int since_resync = 0;

    auto finish = [&](bool converged) {
        auto [t, e] = exact_totals();
        if (!converged && throw_on_fail)
            throw QuadratureError("adaptive quadrature: panel budget exhausted (err " +
                                      std::to_string(e) + ")",
                                  e);
        if constexpr (std::is_same_v<Value, double>)
            return IntegralResult{t, e, panels, converged};
        else
            return IntegralResultC{t, e, panels, converged};
    };

    while (true) {
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * err_norm(total));
        if (errsum <= tol) {
            auto [t, e] = exact_totals();
            total = t;
            errsum = e;
            if (e <= std::max(cfg.abs_tol, cfg.rel_tol * err_norm(t))) return finish(true);
        }
        if (panels >= cfg.max_panels) return finish(false);

        HeapEntry top{};
        bool have = false;
        while (!queue.empty()) {
            top = queue.top();
            queue.pop();
            if (top.idx < pieces.size() && pieces[top.idx].err == top.err &&
                pieces[top.idx].a == top.a) {
                have = true;
                break;
            }
        }
        if (!have) return finish(true);  // nothing left to refine

        Piece p = pieces[top.idx];
        double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) {
            // not splittable at double resolution; freeze its contribution
            errsum -= pieces[top.idx].err;
            pieces[top.idx].err = 0.0;
            continue;
        }
        Piece left = make_piece(p.a, m);
        Piece right = make_piece(m, p.b);
        errsum += left.err + right.err - p.err;
        total = total + left.value + right.value - p.value;
        pieces[top.idx] = left;
        queue.push({left.err, left.a, top.idx});
        pieces.push_back(right);
        queue.push({right.err, right.a, pieces.size() - 1});
        ++panels;
        if (++since_resync >= 4096) {  // shed incremental drift
            auto [t, e] = exact_totals();
            total = t;
            errsum = e;
            since_resync = 0;
        }
    }
}

}  // namespace detail

template <class F>
IntegralResult integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg,
                                  bool throw_on_fail = true) {
    return detail::integrate_adaptive_impl<double>(std::forward<F>(f), a, b, cfg, throw_on_fail);
}

template <class F>
IntegralResultC integrate_adaptive_c(F&& f, double a, double b, const QuadratureConfig& cfg,
                                     bool throw_on_fail = true) {
    return detail::integrate_adaptive_impl<std::complex<double>>(std::forward<F>(f), a, b, cfg,
                                                                 throw_on_fail);
}

/// Smallest T such that the regularized upper incomplete Gamma mass
/// Q(shape, T) is certified below tol, via the Chernoff bound
/// Q(shape, T) <= exp(shape*log(T/shape) + shape - T) for T > shape.
double gamma_tail_cutoff(double shape, double tol);

/// Regularized lower incomplete Gamma mass P(n, x) for integer shape n,
/// evaluated in log space (safe for n in the thousands).
double gamma_lower_mass(std::size_t n, double x);

/// log of the Gamma(n)-normalized weight e^{-t} t^{n-1} / Gamma(n).
inline double log_gamma_weight(double n, double t) {
    if (n == 1.0) return -t;
    return (n - 1.0) * std::log(t) - t - std::lgamma(n);
}

inline double gamma_weight(double n, double t) {
    if (t <= 0.0) return n == 1.0 ? 1.0 : 0.0;
    double lw = log_gamma_weight(n, t);
    return lw > -745.0 ? std::exp(lw) : 0.0;
}

}  // namespace cesaro

#endif
