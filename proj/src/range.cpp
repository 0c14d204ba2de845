#include "cesaro/range.hpp"

#include <algorithm>
#include <cmath>

#include "cesaro/compensated.hpp"

namespace cesaro {

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::member: return "member";
        case Membership::non_member: return "non_member";
        case Membership::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct WindowStats {
    double max_mag = 0.0;       // max |S_m| over the window
    double osc = 0.0;           // max - min over the window, componentwise-combined
};

/// Partial-sum statistics over the last dyadic windows (M/2, M], (M/4, M/2], ...
std::vector<WindowStats> dyadic_window_stats(std::span<const Cplx> terms, int windows,
                                             double& global_max_mag) {
    const std::size_t m = terms.size();
    std::vector<double> mags(m);
    std::vector<Cplx> sums(m);
    NeumaierSumC acc;
    global_max_mag = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc.add(terms[i]);
        sums[i] = acc.value();
        mags[i] = std::abs(sums[i]);
        global_max_mag = std::max(global_max_mag, mags[i]);
    }
    std::vector<WindowStats> stats;
    std::size_t hi = m;
    for (int w = 0; w < windows && hi >= 2; ++w) {
        std::size_t lo = hi / 2;
        WindowStats ws;
        double re_min = sums[lo].real(), re_max = re_min;
        double im_min = sums[lo].imag(), im_max = im_min;
        for (std::size_t i = lo; i < hi; ++i) {
            ws.max_mag = std::max(ws.max_mag, mags[i]);
            re_min = std::min(re_min, sums[i].real());
            re_max = std::max(re_max, sums[i].real());
            im_min = std::min(im_min, sums[i].imag());
            im_max = std::max(im_max, sums[i].imag());
        }
        ws.osc = std::hypot(re_max - re_min, im_max - im_min);
        stats.push_back(ws);
        hi = lo;
    }
    std::reverse(stats.begin(), stats.end());  // oldest window first
    return stats;
}

}  // namespace

Verdict series_probe(std::span<const Cplx> terms, const SeriesProbeOptions& opts) {
    if (terms.size() < 64) throw std::invalid_argument("series_probe: need at least 64 terms");

    double global_max = 0.0;
    auto stats = dyadic_window_stats(terms, 3, global_max);
    const WindowStats& last = stats.back();

    Verdict v;
    const double tol_conv = opts.conv_tol_scale * (1.0 + global_max);
    v.diagnostics.push_back({"last_window_oscillation", last.osc, tol_conv});

    if (last.osc < tol_conv) {
        v.status = Membership::member;
        return v;
    }

    if (stats.size() == 3) {
        const double m0 = stats[0].max_mag, m1 = stats[1].max_mag, m2 = stats[2].max_mag;
        const double d1 = m1 - m0, d2 = m2 - m1;
        v.diagnostics.push_back({"window_max_mag_0", m0, 0.0});
        v.diagnostics.push_back({"window_max_mag_1", m1, 0.0});
        v.diagnostics.push_back({"window_max_mag_2", m2, 0.0});
        v.diagnostics.push_back({"increment_ratio", d1 > 0.0 ? d2 / d1 : 0.0,
                                 1.0 - opts.div_tol});
        // sustained monotone growth: magnitudes increase and the increment
        // does not decay by more than div_tol per doubling
        if (d1 > 0.0 && d2 > 0.0 && d2 >= (1.0 - opts.div_tol) * d1) {
            v.status = Membership::non_member;
            return v;
        }
    }
    v.status = Membership::inconclusive;
    return v;
}

Verdict range_membership(const ConvergentSeq& x, int order, const SeriesProbeOptions& opts) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("range_membership: order must be 1 or 2");

    constexpr double kExactTol = 1e-12;
    Verdict v;
    bool exact_fail = false;

    const double x0 = std::abs(x[0]);
    const double lim = std::abs(x.limit());
    v.diagnostics.push_back({"abs_x0", x0, kExactTol});
    v.diagnostics.push_back({"abs_limit", lim, kExactTol});
    if (x0 > kExactTol || lim > kExactTol) exact_fail = true;

    if (x.size() < 65) {
        v.status = exact_fail ? Membership::non_member : Membership::inconclusive;
        v.diagnostics.push_back({"prefix_too_short_for_probe",
                                 static_cast<double>(x.size()), 65.0});
        return v;
    }

    std::vector<Cplx> terms(x.size() - 1);
    for (std::size_t k = 1; k < x.size(); ++k)
        terms[k - 1] = x[k] / static_cast<double>(k);
    Verdict probe = series_probe(terms, opts);
    for (auto& d : probe.diagnostics) {
        d.condition = "series[x_k/k]." + d.condition;
        v.diagnostics.push_back(d);
    }

    Membership status = probe.status;

    if (order == 2 && !exact_fail) {
        // sum x_k/k = 0, judged against the probe's own tail scale
        NeumaierSumC full;
        for (const Cplx& t : terms) full.add(t);
        const double osc = probe.diagnostics.empty() ? 0.0 : probe.diagnostics[0].value;
        const double zero_tol =
            std::max(opts.conv_tol_scale * (1.0 + std::abs(full.value())), 3.0 * osc);
        const double sum_mag = std::abs(full.value());
        v.diagnostics.push_back({"series_sum_zero", sum_mag, zero_tol});
        if (sum_mag > zero_tol) exact_fail = true;

        // existence of lim_n sum_{k<=n} log(n/k) x_k/k:
        // L_n = log(n) A_n - B_n with A_n = sum x_k/k, B_n = sum log(k) x_k/k
        std::vector<Cplx> lvals;
        NeumaierSumC a, b;
        const std::size_t nmax = x.size() - 1;
        std::size_t next_sample = std::max<std::size_t>(8, nmax / 128);
        for (std::size_t k = 1; k <= nmax; ++k) {
            Cplx t = x[k] / static_cast<double>(k);
            a.add(t);
            b.add(std::log(static_cast<double>(k)) * t);
            if (k >= next_sample || k == nmax) {
                lvals.push_back(std::log(static_cast<double>(k)) * a.value() - b.value());
                next_sample = std::max(next_sample + 1,
                                       static_cast<std::size_t>(next_sample * 1.09));
            }
        }
        if (lvals.size() >= 8) {
            double lo_re = lvals[lvals.size() / 2].real(), hi_re = lo_re;
            double lo_im = lvals[lvals.size() / 2].imag(), hi_im = lo_im;
            double max_mag = 0.0;
            for (std::size_t i = lvals.size() / 2; i < lvals.size(); ++i) {
                lo_re = std::min(lo_re, lvals[i].real());
                hi_re = std::max(hi_re, lvals[i].real());
                lo_im = std::min(lo_im, lvals[i].imag());
                hi_im = std::max(hi_im, lvals[i].imag());
                max_mag = std::max(max_mag, std::abs(lvals[i]));
            }
            const double losc = std::hypot(hi_re - lo_re, hi_im - lo_im);
            const double ltol = opts.conv_tol_scale * (1.0 + max_mag);
            v.diagnostics.push_back({"log_weighted_limit_oscillation", losc, ltol});
            if (losc >= ltol && status == Membership::member)
                status = Membership::inconclusive;
        } else {
            status = Membership::inconclusive;
        }
    }

    if (exact_fail)
        v.status = Membership::non_member;
    else
        v.status = status;
    return v;
}

PreimageResult construct_preimage(const ConvergentSeq& x, Cplx y0, bool membership_checked) {
    const std::size_t n = x.size();
    std::vector<Cplx> y(n);
    y[0] = y0;
    NeumaierSumC run;  // sum_{j=1}^{k-1} x_j/j
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        y[k] = y0 + (1.0 + 1.0 / kk) * x[k] + run.value();
        run.add(x[k] / kk);
    }
    // limit = y0 + sum_{j>=1} x_j/j, approximated by the stored partial sum;
    // the uncertainty is the oscillation scale of the last dyadic window
    Cplx limit = y0 + run.value();
    double uncertainty = 0.0;
    if (n >= 3) {
        NeumaierSumC half;
        for (std::size_t k = 1; k < n / 2; ++k) half.add(x[k] / static_cast<double>(k));
        uncertainty = std::abs(run.value() - half.value());
    }
    PreimageResult out{ConvergentSeq(std::move(y), limit), uncertainty, !membership_checked};
    return out;
}

}  // namespace cesaro
