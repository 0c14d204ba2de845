#include "cesaro/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

namespace cesaro {

SpectrumVerdict spectrum_classify(Cplx z) {
    constexpr double kTol = 1e-12;
    const double r = std::abs(z - Cplx{0.5, 0.0});
    SpectrumVerdict v;
    v.distance_to_boundary = std::abs(r - 0.5);
    if (v.distance_to_boundary <= kTol) {
        v.location = SpectrumLocation::boundary;
        v.distance_to_boundary = 0.0;
    } else if (r < 0.5) {
        v.location = SpectrumLocation::interior;
    } else {
        v.location = SpectrumLocation::exterior;
    }
    return v;
}

double resolvent_lower_bound(double theta) {
    if (theta == 0.0 || std::abs(theta) > M_PI + 1e-15)
        throw std::invalid_argument("resolvent_lower_bound: need 0 < |theta| <= pi");
    return 1.0 / (1.0 - std::cos(theta));
}

namespace {

int resolve_threads(int requested) {
    // the environment overrides any configured worker count
    if (const char* env = std::getenv("CESARO_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Absolute row sums of rows `k` of C^n(I-C) at every checkpoint in
/// `n_list` (increasing).  Row k of a power is supported on columns 0..k,
/// so the work vector has length k+1 and the result is independent of N.
///
/// Transpose application: (C^T u)_j = sum_{k'>=j} u_{k'}/(k'+1), one suffix
/// sum.  The final (I - C^T) is reorganized as
///   v_j = u_j * j/(j+1) - tail_{j+1},   tail_j = sum_{k'>=j} u_{k'}/(k'+1),
/// which avoids the unit-magnitude cancellation of forming u - C^T u.
void row_sums_checkpointed(std::size_t k, const std::vector<std::size_t>& n_list,
                           const std::vector<double>& recip, std::vector<double>& scratch,
                           std::vector<double>& out) {
    std::vector<double>& u = scratch;
    u.assign(k + 1, 0.0);
    u[k] = 1.0;
    out.assign(n_list.size(), 0.0);

    std::size_t applied = 0;
    for (std::size_t ci = 0; ci < n_list.size(); ++ci) {
        for (; applied < n_list[ci]; ++applied) {
            double tail = 0.0;
            for (std::size_t j = k + 1; j-- > 0;) {
                tail += u[j] * recip[j];
                u[j] = tail;
            }
        }
        // one (I - C^T) step, without mutating u
        double tail = 0.0;
        double sum = 0.0;
        for (std::size_t j = k + 1; j-- > 0;) {
            double v = u[j] * (static_cast<double>(j) * recip[j]) - tail;
            // v uses tail_{j+1}; update tail to tail_j afterwards
            tail += u[j] * recip[j];
            sum += std::abs(v);
        }
        out[ci] = sum;
    }
}

struct SweepBest {
    double value = -1.0;
    std::size_t row = 0;
};

}  // namespace

std::vector<double> kt_row_abs_sums(std::size_t k, const std::vector<std::size_t>& n_list) {
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("kt_row_abs_sums: n list must be strictly increasing");
    std::vector<double> recip(k + 1);
    for (std::size_t j = 0; j <= k; ++j) recip[j] = 1.0 / static_cast<double>(j + 1);
    std::vector<double> scratch, out;
    row_sums_checkpointed(k, n_list, recip, scratch, out);
    return out;
}

std::vector<KtRow> kt_decay_table(const std::vector<std::size_t>& n_list, std::size_t N,
                                  const KtNormOptions& opts) {
    if (N < 2) throw std::invalid_argument("kt_decay_table: N must be >= 2");
    if (n_list.empty()) throw std::invalid_argument("kt_decay_table: empty n list");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("kt_decay_table: n list must be strictly increasing");

    std::vector<double> recip(N);
    for (std::size_t j = 0; j < N; ++j) recip[j] = 1.0 / static_cast<double>(j + 1);

    const int stride = opts.full_sweep ? 1 : std::max(1, opts.subsample_stride);
    std::vector<std::size_t> rows;
    for (std::size_t k = 0; k < N; k += static_cast<std::size_t>(stride)) rows.push_back(k);
    if (rows.back() != N - 1) rows.push_back(N - 1);

    const int nthreads = resolve_threads(opts.threads);
    const std::size_t checkpoints = n_list.size();

    auto sweep = [&](const std::vector<std::size_t>& row_set,
                     std::vector<SweepBest>& best) {
        best.assign(checkpoints, SweepBest{});
        std::vector<std::vector<SweepBest>> partial(
            static_cast<std::size_t>(nthreads), std::vector<SweepBest>(checkpoints));
        std::vector<std::thread> pool;
        std::atomic<std::size_t> cursor{0};
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                std::vector<double> scratch, sums;
                std::vector<SweepBest>& mine = partial[static_cast<std::size_t>(t)];
                for (;;) {
                    std::size_t i = cursor.fetch_add(1);
                    if (i >= row_set.size()) break;
                    std::size_t k = row_set[i];
                    row_sums_checkpointed(k, n_list, recip, scratch, sums);
                    for (std::size_t ci = 0; ci < checkpoints; ++ci) {
                        if (sums[ci] > mine[ci].value ||
                            (sums[ci] == mine[ci].value && k < mine[ci].row)) {
                            mine[ci].value = sums[ci];
                            mine[ci].row = k;
                        }
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        // deterministic reduction: thread partials merged in fixed order,
        // ties resolved toward the smaller row index
        for (std::size_t ci = 0; ci < checkpoints; ++ci) {
            for (const auto& mine : partial) {
                if (mine[ci].value > best[ci].value ||
                    (mine[ci].value == best[ci].value && mine[ci].row < best[ci].row))
                    best[ci] = mine[ci];
            }
        }
    };

    std::vector<SweepBest> best;
    sweep(rows, best);

    if (!opts.full_sweep && opts.refine_radius > 0) {
        std::set<std::size_t> refine;
        for (const SweepBest& b : best) {
            std::size_t lo = b.row > static_cast<std::size_t>(opts.refine_radius)
                                 ? b.row - static_cast<std::size_t>(opts.refine_radius)
                                 : 0;
            std::size_t hi = std::min(N - 1, b.row + static_cast<std::size_t>(opts.refine_radius));
            for (std::size_t k = lo; k <= hi; ++k) refine.insert(k);
        }
        std::vector<std::size_t> extra(refine.begin(), refine.end());
        std::vector<SweepBest> more;
        sweep(extra, more);
        for (std::size_t ci = 0; ci < checkpoints; ++ci) {
            if (more[ci].value > best[ci].value ||
                (more[ci].value == best[ci].value && more[ci].row < best[ci].row))
                best[ci] = more[ci];
        }
    }

    std::vector<KtRow> table(checkpoints);
    for (std::size_t ci = 0; ci < checkpoints; ++ci) {
        KtRow& r = table[ci];
        r.n = n_list[ci];
        r.N = N;
        r.value = best[ci].value;
        const double nd = static_cast<double>(r.n);
        r.sqrt_scaled = std::sqrt(std::max(nd, 1.0)) * r.value;
        r.log_comparison =
            r.n >= 1 ? std::sqrt(std::log(nd)) / std::sqrt(nd)
                     : std::numeric_limits<double>::quiet_NaN();
        r.argmax_row = static_cast<std::ptrdiff_t>(best[ci].row);
        r.boundary_saturated = best[ci].row + std::max<std::size_t>(1, N / 20) >= N;
    }
    return table;
}

NormEstimate finite_section_kt_norm(std::size_t n, std::size_t N, const KtNormOptions& opts) {
    auto table = kt_decay_table({n}, N, opts);
    NormEstimate est;
    est.value = table[0].value;
    est.argmax_index = table[0].argmax_row;
    est.boundary_saturated = table[0].boundary_saturated;
    est.truncation = N;
    return est;
}

}  // namespace cesaro
