#include "cesaro/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cesaro/compensated.hpp"

namespace cesaro {

struct FunctionHandle::Impl {
    Space space = Space::interval;
    std::function<Cplx(double)> eval;
    Cplx at0{0.0, 0.0};
    Cplx atinf{0.0, 0.0};
    double osc_scale = std::numeric_limits<double>::infinity();
    std::string describe;
    bool limit_ok = true;
};

namespace {

constexpr double kSinlogPhaseCutoff = 1e14;

void check_domain(const FunctionHandle::Impl& impl, double t) {
    if (t < 0.0) throw std::domain_error("FunctionHandle: t must be >= 0");
    if (impl.space == Space::interval && t > 1.0 + 1e-15)
        throw std::domain_error("FunctionHandle: t beyond [0,1]");
}

bool probe_limit(const std::function<Cplx(double)>& eval, Cplx limit) {
    // soft check that sampled values approach the declared limit
    double prev = std::numeric_limits<double>::infinity();
    int improving = 0;
    for (double t : {1e3, 1e6, 1e9, 1e12}) {
        double dev = 0.0;
        for (double s : {1.0, 1.3, 1.9, 2.7}) dev = std::max(dev, std::abs(eval(t * s) - limit));
        if (dev <= prev * 1.2) ++improving;
        prev = dev;
    }
    return improving >= 3;
}

}  // namespace

FunctionHandle FunctionHandle::poly(Space space, std::vector<Cplx> coeffs) {
    if (coeffs.empty()) coeffs.push_back(Cplx{0.0, 0.0});
    if (space == Space::halfline) {
        for (std::size_t m = 1; m < coeffs.size(); ++m)
            if (std::abs(coeffs[m]) != 0.0)
                throw std::invalid_argument(
                    "FunctionHandle::poly: non-constant polynomials have no limit at infinity");
    }
    auto impl = std::make_shared<Impl>();
    impl->space = space;
    impl->at0 = coeffs[0];
    impl->atinf = coeffs[0];
    impl->describe = "poly";
    impl->eval = [coeffs = std::move(coeffs)](double t) {
        if (coeffs.size() == 1 || !std::isfinite(t)) return coeffs[0];
        Cplx acc{0.0, 0.0};
        for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * t + coeffs[m];
        return acc;
    };
    return FunctionHandle(std::move(impl));
}

FunctionHandle FunctionHandle::sinlog(Space space) {
    auto impl = std::make_shared<Impl>();
    impl->space = space;
    impl->at0 = Cplx{0.0, 0.0};
    impl->atinf = Cplx{0.0, 0.0};
    impl->osc_scale = M_PI;
    impl->describe = "sinlog";
    impl->eval = [](double t) -> Cplx {
        if (!(t < kSinlogPhaseCutoff)) return {0.0, 0.0};
        return {std::sin(t) / std::log(2.0 + t), 0.0};
    };
    if (space == Space::halfline) impl->limit_ok = probe_limit(impl->eval, impl->atinf);
    return FunctionHandle(std::move(impl));
}

FunctionHandle FunctionHandle::loginv() {
    auto impl = std::make_shared<Impl>();
    impl->space = Space::interval;
    impl->at0 = Cplx{0.0, 0.0};
    impl->atinf = Cplx{1.0, 0.0};  // value at t = 1
    impl->describe = "loginv";
    impl->eval = [](double t) -> Cplx {
        if (t <= 0.0) return {0.0, 0.0};
        return {1.0 / (1.0 - std::log(t)), 0.0};
    };
    return FunctionHandle(std::move(impl));
}

FunctionHandle FunctionHandle::samples(Space space, std::vector<std::pair<double, Cplx>> points,
                                       Cplx limit_at_inf) {
    if (points.size() < 2)
        throw std::invalid_argument("FunctionHandle::samples: need at least two points");
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (points.front().first != 0.0)
        throw std::invalid_argument("FunctionHandle::samples: first sample must sit at t = 0");
    if (space == Space::interval && points.back().first < 1.0)
        throw std::invalid_argument("FunctionHandle::samples: interval samples must reach t = 1");

    auto impl = std::make_shared<Impl>();
    impl->space = space;
    impl->at0 = points.front().second;
    impl->atinf = space == Space::halfline ? limit_at_inf : points.back().second;
    impl->describe = "samples";
    const Cplx last_v = points.back().second;
    const double last_t = points.back().first;
    impl->eval = [points = std::move(points), space, limit_at_inf, last_v,
                  last_t](double t) -> Cplx {
        if (t >= last_t) {
            if (space == Space::interval) return last_v;
            if (!(t > 0.0) || !std::isfinite(t)) return limit_at_inf;
            return limit_at_inf + (last_v - limit_at_inf) * (last_t / t);
        }
        auto it = std::lower_bound(points.begin(), points.end(), t,
                                   [](const auto& p, double x) { return p.first < x; });
        if (it == points.begin()) return it->second;
        auto prev = std::prev(it);
        const double w = (t - prev->first) / (it->first - prev->first);
        return prev->second + w * (it->second - prev->second);
    };
    return FunctionHandle(std::move(impl));
}

Cplx FunctionHandle::operator()(double t) const {
    check_domain(*impl_, t);
    return impl_->eval(t);
}

Space FunctionHandle::space() const { return impl_->space; }
Cplx FunctionHandle::value_at_0() const { return impl_->at0; }
Cplx FunctionHandle::limit_at_inf() const { return impl_->atinf; }
double FunctionHandle::oscillation_scale() const { return impl_->osc_scale; }
const std::string& FunctionHandle::description() const { return impl_->describe; }
bool FunctionHandle::limit_check_ok() const { return impl_->limit_ok; }

FunctionHandle FunctionHandle::centered() const {
    auto impl = std::make_shared<Impl>();
    impl->space = impl_->space;
    impl->at0 = Cplx{0.0, 0.0};
    impl->atinf = impl_->atinf - impl_->at0;
    impl->osc_scale = impl_->osc_scale;
    impl->describe = impl_->describe + "-centered";
    impl->limit_ok = impl_->limit_ok;
    impl->eval = [inner = impl_, c = impl_->at0](double t) { return inner->eval(t) - c; };
    return FunctionHandle(std::move(impl));
}

namespace {

/// Integrate handle-valued integrands over [a, b], pre-chopped at the
/// handle's oscillation scale so the adaptive pass never chases thousands
/// of sin periods inside one panel.
IntegralResultC integrate_fn(const std::function<Cplx(double)>& f, double a, double b,
                             double osc_scale, const QuadratureConfig& cfg) {
    if (!(b > a)) return {};
    double chunk = std::isfinite(osc_scale) ? 64.0 * osc_scale
                                            : std::numeric_limits<double>::infinity();
    if (!(b - a > chunk)) return integrate_adaptive_c(f, a, b, cfg);

    IntegralResultC total;
    NeumaierSumC value;
    QuadratureConfig local = cfg;
    double lo = a;
    while (lo < b) {
        double hi = std::min(b, lo + chunk);
        auto seg = integrate_adaptive_c(f, lo, hi, local);
        value.add(seg.value);
        total.error_estimate += seg.error_estimate;
        total.panels += seg.panels;
        lo = hi;
    }
    total.value = value.value();
    total.converged = true;
    return total;
}

struct CumulativeCache {
    std::mutex m;
    std::map<double, Cplx> cum;  // int over [base, t] keyed by t, cum[base] = 0
};

/// Cached cumulative integral of `f` from `base`; each evaluation extends
/// (in either direction) from the nearest cached breakpoint.
Cplx cumulative_from(const std::shared_ptr<CumulativeCache>& cache,
                     const std::function<Cplx(double)>& f, double osc_scale, double base,
                     double t, const QuadratureConfig& cfg) {
    double t0 = base;
    Cplx f0{0.0, 0.0};
    {
        std::lock_guard<std::mutex> lock(cache->m);
        if (!cache->cum.empty()) {
            auto it = cache->cum.upper_bound(t);
            if (it == cache->cum.begin()) {
                t0 = it->first;
                f0 = it->second;
            } else {
                --it;
                t0 = it->first;
                f0 = it->second;
            }
        }
    }
    if (t == t0) return f0;
    Cplx val = t > t0 ? f0 + integrate_fn(f, t0, t, osc_scale, cfg).value
                      : f0 - integrate_fn(f, t, t0, osc_scale, cfg).value;
    {
        std::lock_guard<std::mutex> lock(cache->m);
        cache->cum.emplace(t, val);
    }
    return val;
}

}  // namespace

FunctionHandle cesaro_apply_fn(const FunctionHandle& f, const QuadratureConfig& cfg) {
    cfg.validate();
    auto impl = std::make_shared<FunctionHandle::Impl>();
    impl->space = f.space();
    impl->at0 = f.value_at_0();
    impl->atinf = f.limit_at_inf();  // Cesaro averages preserve the limit
    impl->osc_scale = f.oscillation_scale();
    impl->describe = "avg(" + f.description() + ")";
    impl->limit_ok = f.limit_check_ok();
    auto cache = std::make_shared<CumulativeCache>();
    impl->eval = [f, cache, cfg](double t) -> Cplx {
        if (t <= 0.0) return f.value_at_0();
        auto inner = [&f](double s) { return f(s); };
        Cplx F = cumulative_from(cache, inner, f.oscillation_scale(), 0.0, t, cfg);
        return F / t;
    };
    return FunctionHandle(std::move(impl));
}

Cplx power_eval_fn_log(const FunctionHandle& f, std::size_t n, double log_t,
                       const QuadratureConfig& cfg) {
    if (n < 1) throw std::invalid_argument("power_eval_fn: n must be >= 1");
    cfg.validate();
    if (f.space() == Space::interval && log_t > 1e-15)
        throw std::domain_error("power_eval_fn: t beyond [0,1]");
    const double shape = static_cast<double>(n);
    const double u_max = gamma_tail_cutoff(shape, cfg.tail_mass_tol);
    const bool interval = f.space() == Space::interval;

    // For oscillatory halfline handles the region where the argument
    // e^{log_t - u} exceeds A carries phases the quadrature cannot resolve.
    // Its true contribution beyond the limit value is bounded (integration
    // by parts in the phase) by ~4 w_max env(A)/A, which is below every
    // tolerance in use at A = 4096; only the limit mass survives.
    double u_lo = 0.0;
    Cplx skipped{0.0, 0.0};
    if (!interval && std::isfinite(f.oscillation_scale())) {
        constexpr double kPhaseGuard = 4096.0;
        u_lo = std::max(0.0, log_t - std::log(kPhaseGuard));
        if (u_lo >= u_max) return f.limit_at_inf();
        if (u_lo > 0.0) skipped = f.limit_at_inf() * gamma_lower_mass(n, u_lo);
    }

    // centered integrand: T^n f = f(0) + (1/Gamma(n)) int w (f - f(0)); the
    // deviation form keeps constants exactly fixed and absorbs the truncated
    // tail mass into the deviation scale
    const Cplx f0 = f.value_at_0();
    if (u_lo > 0.0) skipped -= f0 * gamma_lower_mass(n, u_lo);
    auto res = integrate_adaptive_c(
        [&](double u) {
            double w = gamma_weight(shape, u);
            if (w == 0.0) return Cplx{0.0, 0.0};
            double arg = std::exp(log_t - u);  // may overflow to inf; handles cope
            if (interval && arg > 1.0) arg = 1.0;
            return w * (f(arg) - f0);
        },
        u_lo, u_max, cfg);
    return f0 + skipped + res.value;
}

Cplx power_eval_fn(const FunctionHandle& f, std::size_t n, double t,
                   const QuadratureConfig& cfg) {
    if (t < 0.0) throw std::domain_error("power_eval_fn: t must be >= 0");
    if (t == 0.0) return f.value_at_0();
    return power_eval_fn_log(f, n, std::log(t), cfg);
}

Verdict range_membership_fn(const FunctionHandle& f, MembershipMode mode,
                            const QuadratureConfig& cfg) {
    cfg.validate();
    constexpr double kExactTol = 1e-12;
    const FunctionHandle g = mode == MembershipMode::centered ? f.centered() : f;

    Verdict v;
    bool exact_fail = false;
    if (mode == MembershipMode::raw) {
        const double f0 = std::abs(f.value_at_0());
        v.diagnostics.push_back({"abs_f0", f0, kExactTol});
        if (f0 > kExactTol) exact_fail = true;
    }
    if (f.space() == Space::halfline) {
        // raw: limit must vanish; centered: limit must match f(0)
        const double lim_dev = std::abs(g.limit_at_inf());
        v.diagnostics.push_back({"abs_limit_minus_f0", lim_dev, kExactTol});
        if (lim_dev > kExactTol) exact_fail = true;
        if (!f.limit_check_ok())
            v.diagnostics.push_back({"declared_limit_probe_failed", 1.0, 0.0});
    }
    if (exact_fail) {
        v.status = Membership::non_member;
        return v;
    }

    auto over_t = [&](double s) { return g(s) / s; };

    // ladder toward 0: I_j = int_{2^-j}^{1} g/t
    std::vector<Cplx> ladder;
    NeumaierSumC acc;
    double hi = 1.0;
    for (int j = 1; j <= 44; ++j) {
        double lo = std::ldexp(1.0, -j);
        acc.add(integrate_fn(over_t, lo, hi, g.oscillation_scale(), cfg).value);
        ladder.push_back(acc.value());
        hi = lo;
    }
    auto judge = [&](const std::vector<Cplx>& vals, const char* tag) -> Membership {
        double max_mag = 0.0;
        for (const Cplx& c : vals) max_mag = std::max(max_mag, std::abs(c));
        const std::size_t tail_window = std::max<std::size_t>(4, vals.size() / 4);
        const std::size_t start = vals.size() - tail_window;
        double re_lo = vals[start].real(), re_hi = re_lo;
        double im_lo = vals[start].imag(), im_hi = im_lo;
        for (std::size_t i = start; i < vals.size(); ++i) {
            re_lo = std::min(re_lo, vals[i].real());
            re_hi = std::max(re_hi, vals[i].real());
            im_lo = std::min(im_lo, vals[i].imag());
            im_hi = std::max(im_hi, vals[i].imag());
        }
        const double osc = std::hypot(re_hi - re_lo, im_hi - im_lo);
        const double tol = 1e-6 * (1.0 + max_mag);
        v.diagnostics.push_back({std::string(tag) + "_oscillation", osc, tol});
        if (osc < tol) return Membership::member;
        // sustained increments => divergent
        const std::size_t m = vals.size();
        const double d1 = std::abs(vals[m - 2] - vals[m - 3]);
        const double d2 = std::abs(vals[m - 1] - vals[m - 2]);
        v.diagnostics.push_back({std::string(tag) + "_increment_ratio",
                                 d1 > 0.0 ? d2 / d1 : 0.0, 0.90});
        if (d2 > tol && d2 >= 0.90 * d1) return Membership::non_member;
        return Membership::inconclusive;
    };

    Membership lower = judge(ladder, "eps_ladder");
    if (f.space() == Space::interval) {
        v.status = lower;
        return v;
    }

    // halfline: R ladder upward, I_j = int_1^{2^j} g/t
    std::vector<Cplx> upper_vals;
    NeumaierSumC up;
    double lo = 1.0;
    for (int j = 1; j <= 24; ++j) {
        double top = std::ldexp(1.0, j);
        up.add(integrate_fn(over_t, lo, top, g.oscillation_scale(), cfg).value);
        upper_vals.push_back(up.value());
        lo = top;
    }
    Membership upper = judge(upper_vals, "R_ladder");

    if (lower == Membership::non_member || upper == Membership::non_member)
        v.status = Membership::non_member;
    else if (lower == Membership::member && upper == Membership::member)
        v.status = Membership::member;
    else
        v.status = Membership::inconclusive;
    return v;
}

FunctionHandle construct_preimage_fn(const FunctionHandle& f, const QuadratureConfig& cfg) {
    cfg.validate();
    auto over_t = [f](double s) { return f(s) / s; };

    // g(0) = -improper int_0^1 f/s, by an epsilon ladder; failure reports
    // the epsilon actually reached
    NeumaierSumC head;
    double hi = 1.0;
    Cplx g_at_0{0.0, 0.0};
    {
        int stable = 0;
        bool done = false;
        for (int j = 1; j <= 48; ++j) {
            double lo = std::ldexp(1.0, -j);
            auto seg = integrate_fn(over_t, lo, hi, f.oscillation_scale(), cfg);
            head.add(seg.value);
            hi = lo;
            if (std::abs(seg.value) < std::max(cfg.abs_tol, 1e-14 * (1.0 + std::abs(head.value()))))
                ++stable;
            else
                stable = 0;
            if (stable >= 3) {
                done = true;
                break;
            }
        }
        if (!done)
            throw QuadratureError(
                "construct_preimage_fn: f(s)/s did not stabilize near 0 (reached eps = " +
                    std::to_string(hi) + ")",
                std::abs(head.value()));
        g_at_0 = -head.value();
    }

    auto cache = std::make_shared<CumulativeCache>();  // int over [1, t] of f/s
    auto g_eval = [f, cache, over_t, cfg, g_at_0](double t) -> Cplx {
        if (t <= 0.0) return g_at_0;
        // g(t) = int_1^t f/s (= -int_t^1 below 1), relative to the cached base
        return cumulative_from(cache, over_t, f.oscillation_scale(), 1.0, t, cfg);
    };
    // base entry so lookups below 1 integrate downward from the base
    {
        std::lock_guard<std::mutex> lock(cache->m);
        cache->cum.emplace(1.0, Cplx{0.0, 0.0});
    }

    Cplx g_inf{0.0, 0.0};
    if (f.space() == Space::halfline) {
        // lim g = improper int_1^inf f/s, R ladder with stabilization
        NeumaierSumC up;
        double lo = 1.0;
        int stable = 0;
        bool done = false;
        for (int j = 1; j <= 24; ++j) {
            double top = std::ldexp(1.0, j);
            auto seg = integrate_fn(over_t, lo, top, f.oscillation_scale(), cfg);
            up.add(seg.value);
            lo = top;
            if (std::abs(seg.value) < 1e-7 * (1.0 + std::abs(up.value())))
                ++stable;
            else
                stable = 0;
            if (stable >= 2) {
                done = true;
                break;
            }
        }
        if (!done)
            throw QuadratureError(
                "construct_preimage_fn: improper integral toward infinity did not stabilize",
                std::abs(up.value()));
        g_inf = up.value();
    }

    auto impl = std::make_shared<FunctionHandle::Impl>();
    impl->space = f.space();
    impl->at0 = f.value_at_0() + g_at_0;
    impl->atinf = f.limit_at_inf() + g_inf;
    impl->osc_scale = f.oscillation_scale();
    impl->describe = "preimage(" + f.description() + ")";
    impl->limit_ok = f.limit_check_ok();
    impl->eval = [f, g_eval, g_at_0](double t) -> Cplx {
        if (t <= 0.0) return f.value_at_0() + g_at_0;
        return f(t) + g_eval(t);
    };
    return FunctionHandle(std::move(impl));
}

namespace {

struct GridMax {
    double best = -1.0;
    double arg = 0.0;
    std::size_t index = 0;
};

}  // namespace

NormHistory orbit_norms_fn(const FunctionHandle& f, const std::vector<std::size_t>& schedule,
                           std::size_t grid_size, const QuadratureConfig& cfg) {
    if (grid_size < 9) throw std::invalid_argument("orbit_norms_fn: grid too small");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("orbit_norms_fn: schedule must be strictly increasing");

    const Cplx pf = f.value_at_0();
    const bool half = f.space() == Space::halfline;
    NormHistory hist;
    hist.truncation = grid_size;

    for (std::size_t n : schedule) {
        // interval: value grid on [0,1]; halfline: uniform in log t up to
        // lambda_max(n), capped below the double overflow edge
        const double lam_lo = half ? -4.0 : 0.0;
        const double lam_hi =
            half ? std::min(static_cast<double>(n) + 4.0 * std::sqrt(static_cast<double>(n)) + 6.0,
                            690.0)
                 : 1.0;
        GridMax gm;
        auto value_at = [&](double pos) {
            Cplx v = half ? power_eval_fn_log(f, n, pos, cfg)
                          : power_eval_fn(f, n, pos, cfg);
            return std::abs(v - pf);
        };
        for (std::size_t i = 0; i < grid_size; ++i) {
            double pos = lam_lo + (lam_hi - lam_lo) * static_cast<double>(i) /
                                      static_cast<double>(grid_size - 1);
            double v = value_at(pos);
            if (v > gm.best) {
                gm.best = v;
                gm.arg = pos;
                gm.index = i;
            }
        }
        // one refinement pass: 3-level bisection around the running argmax
        double step = (lam_hi - lam_lo) / static_cast<double>(grid_size - 1);
        for (int level = 0; level < 3; ++level) {
            step *= 0.5;
            for (double pos : {gm.arg - step, gm.arg + step}) {
                if (pos < lam_lo || pos > lam_hi) continue;
                double v = value_at(pos);
                if (v > gm.best) {
                    gm.best = v;
                    gm.arg = pos;
                }
            }
        }
        bool boundary = gm.index + std::max<std::size_t>(1, grid_size / 20) >= grid_size;
        double value = gm.best;
        if (half) {
            double limit_term = std::abs(f.limit_at_inf() - pf);
            if (limit_term > value) {
                value = limit_term;
                boundary = false;  // the limit term is exact
            }
        }
        hist.samples.push_back({n, value, boundary});
    }
    return hist;
}

}  // namespace cesaro
