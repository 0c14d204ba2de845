#include "cesaro/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "cesaro/laguerre.hpp"

namespace cesaro {

NormHistory orbit_norms(const ConvergentSeq& x, const std::vector<std::size_t>& schedule,
                        SumMode mode) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("orbit_norms: schedule must be strictly increasing");

    NormHistory hist;
    hist.truncation = x.size();
    const ConvergentSeq px = project_P(x);
    ConvergentSeq cur = x;
    std::size_t done = 0;
    for (std::size_t n : schedule) {
        for (; done < n; ++done) cur = cesaro_apply(cur, mode);
        NormEstimate est = (n == 0) ? sup_distance(x, px) : sup_distance(cur, px);
        hist.samples.push_back({n, est.value, est.boundary_saturated});
    }
    return hist;
}

std::vector<std::size_t> dyadic_schedule(std::size_t n_max) {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= n_max; n *= 2) out.push_back(n);
    return out;
}

Cplx bernstein_eval(std::span<const Cplx> pts, double s) {
    if (pts.empty()) throw std::invalid_argument("bernstein_eval: need at least one point");
    std::vector<Cplx> b(pts.begin(), pts.end());
    const double t = 1.0 - s;
    for (std::size_t r = b.size() - 1; r > 0; --r)
        for (std::size_t j = 0; j < r; ++j) b[j] = t * b[j] + s * b[j + 1];
    return b[0];
}

Cplx moment_entry(const ConvergentSeq& x, std::size_t k, std::size_t n,
                  const QuadratureConfig& cfg) {
    if (k >= x.size()) throw std::out_of_range("moment_entry: k beyond stored prefix");
    if (n < 1) throw std::invalid_argument("moment_entry: n must be >= 1");
    cfg.validate();
    std::span<const Cplx> pts(x.prefix().data(), k + 1);
    const double shape = static_cast<double>(n);
    const double t_max = gamma_tail_cutoff(shape, cfg.tail_mass_tol);
    auto res = integrate_adaptive_c(
        [&](double t) { return gamma_weight(shape, t) * bernstein_eval(pts, std::exp(-t)); },
        0.0, t_max, cfg);
    return res.value;
}

Cplx talpha_entry(const ConvergentSeq& x, std::size_t k, std::size_t n, double alpha,
                  const QuadratureConfig& cfg) {
    if (k >= x.size()) throw std::out_of_range("talpha_entry: k beyond stored prefix");
    if (n < 1) throw std::invalid_argument("talpha_entry: n must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("talpha_entry: alpha must lie in (0,1)");
    cfg.validate();
    std::span<const Cplx> pts(x.prefix().data(), k + 1);

    // cutoff so that the omitted Gamma(n, alpha) mass is negligible against
    // the ((1-alpha)/alpha)^n scale of the integral
    const double shape = static_cast<double>(n);
    double tol = cfg.tail_mass_tol * 0.5 * std::pow(1.0 - alpha, static_cast<double>(n));
    tol = std::max(tol, 1e-290);
    double t_end = std::max(4.0 * (n + 1.0) + 16.0, gamma_tail_cutoff(shape, tol) / alpha);

    auto res = integrate_adaptive_c(
        [&](double t) {
            return std::exp(-alpha * t) * laguerre_eval(static_cast<int>(n) - 1, t) *
                   bernstein_eval(pts, std::exp(-alpha * t));
        },
        0.0, t_end, cfg);

    const double ratio = alpha / (1.0 - alpha);
    double scale = std::pow(ratio, static_cast<double>(n));
    if (n % 2 != 0) scale = -scale;
    return scale * (x[k] - res.value);
}

double talpha_norm_bound(double alpha, std::size_t n, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("talpha_norm_bound: alpha must lie in (0,1/2)");
    if (n < 1) throw std::invalid_argument("talpha_norm_bound: n must be >= 1");
    double integral = laguerre_abs_integral(static_cast<int>(n) - 1, alpha, cfg);
    return std::pow(alpha / (1.0 - alpha), static_cast<double>(n)) * (1.0 + integral);
}

RateFit fit_rate(const NormHistory& history, std::size_t n_lo, std::size_t n_hi) {
    if (n_lo >= n_hi) throw std::invalid_argument("fit_rate: window must satisfy n_lo < n_hi");
    std::vector<std::pair<double, double>> pts;
    for (const NormSample& s : history.samples) {
        if (s.n < n_lo || s.n > n_hi || s.n == 0) continue;
        if (!(s.value > 0.0)) continue;  // zeros reported by callers, excluded here
        pts.emplace_back(std::log(static_cast<double>(s.n)), std::log(s.value));
    }
    if (pts.size() < 3)
        throw std::invalid_argument("fit_rate: need at least 3 positive samples in window");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [lx, ly] : pts) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(pts.size());
    const double denom = m * sxx - sx * sx;
    RateFit fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    fit.n_lo = n_lo;
    fit.n_hi = n_hi;
    double rss = 0.0;
    for (auto [lx, ly] : pts) {
        double r = ly - (fit.slope * lx + fit.intercept);
        rss += r * r;
    }
    fit.residual = std::sqrt(rss / m);
    return fit;
}

}  // namespace cesaro
