#ifndef CESARO_CONTINUOUS_HPP
#define CESARO_CONTINUOUS_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cesaro/orbit.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/range.hpp"
#include "cesaro/seq.hpp"

namespace cesaro {

enum class Space { interval, halfline };

/// Point-evaluable function on [0,1] or [0,inf) with declared boundary
/// data.  Construction is restricted to the catalog (polynomials, the
/// sin/log example, piecewise-linear samples) and to compositions built
/// by the operations below; no arbitrary user code enters the core.
class FunctionHandle {
public:
    /// f(t) = sum_m coeffs[m] t^m.  On the halfline only degree 0 keeps a
    /// finite limit, higher degrees are rejected.
    static FunctionHandle poly(Space space, std::vector<Cplx> coeffs);
    /// f(t) = sin(t)/log(2+t).  Beyond t = 1e14 a double carries no phase
    /// information, so the evaluator returns the local mean 0 there; the
    /// discarded oscillatory contribution is O(1/t) in every integral used.
    static FunctionHandle sinlog(Space space);
    /// f(t) = 1/log(e/t) on [0,1] with f(0) = 0; vanishes at zero yet
    /// f(t)/t fails to be improperly integrable (log log divergence)
    static FunctionHandle loginv();
    /// piecewise-linear interpolant of (t, value) samples; on the halfline
    /// the evaluator approaches limit_at_inf like 1/t beyond the last node.
    static FunctionHandle samples(Space space, std::vector<std::pair<double, Cplx>> points,
                                  Cplx limit_at_inf = Cplx{0.0, 0.0});

    Cplx operator()(double t) const;
    Space space() const;
    Cplx value_at_0() const;
    Cplx limit_at_inf() const;  // halfline only
    /// half-period of the fastest oscillation (infinity when smooth);
    /// integrators chop long ranges at this scale before refining
    double oscillation_scale() const;
    const std::string& description() const;
    /// soft validity flag of the declared limit (probe-point check)
    bool limit_check_ok() const;

    /// f - f(0)
    FunctionHandle centered() const;

    struct Impl;
    explicit FunctionHandle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

private:
    std::shared_ptr<const Impl> impl_;
};

/// Tf with (Tf)(t) = (1/t) int_0^t f, (Tf)(0) = f(0); evaluations reuse a
/// per-handle cache of cumulative integrals (mutex-guarded).
FunctionHandle cesaro_apply_fn(const FunctionHandle& f, const QuadratureConfig& cfg);

/// (T^n f)(t) via the substituted representation
/// (1/Gamma(n)) int_0^inf e^{-u} u^{n-1} f(t e^{-u}) du, n >= 1.
Cplx power_eval_fn(const FunctionHandle& f, std::size_t n, double t,
                   const QuadratureConfig& cfg);

/// Same with the evaluation point given as log t (halfline suprema live at
/// t ~ e^n, beyond direct double range).
Cplx power_eval_fn_log(const FunctionHandle& f, std::size_t n, double log_t,
                       const QuadratureConfig& cfg);

enum class MembershipMode { raw, centered };

/// Range membership via the endpoint conditions and an epsilon/R ladder
/// probe of the improper integral of f(t)/t (oscillation heuristic).
Verdict range_membership_fn(const FunctionHandle& f, MembershipMode mode,
                            const QuadratureConfig& cfg);

/// h = f + g with g(t) = -int_t^1 f(s)/s ds (extended by
/// g(t) = int_1^t f(s)/s ds beyond 1 on the halfline); (I-T)h = f.
FunctionHandle construct_preimage_fn(const FunctionHandle& f, const QuadratureConfig& cfg);

/// sup over a refinable grid of |T^n f - f(0)| per schedule entry.
/// Interval: uniform grid with a 3-level bisection pass around the argmax.
/// Halfline: geometric grid, uniform in log t up to n + 4 sqrt(n) + 6
/// (capped at the double range), limit term included.
NormHistory orbit_norms_fn(const FunctionHandle& f, const std::vector<std::size_t>& schedule,
                           std::size_t grid_size, const QuadratureConfig& cfg);

}  // namespace cesaro

#endif
