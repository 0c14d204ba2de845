#ifndef CESARO_SPECTRAL_HPP
#define CESARO_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "cesaro/seq.hpp"

namespace cesaro {

enum class SpectrumLocation { interior, boundary, exterior };

struct SpectrumVerdict {
    SpectrumLocation location = SpectrumLocation::exterior;
    double distance_to_boundary = 0.0;
};

/// sigma(T) is the closed disc |z - 1/2| <= 1/2; classify with tolerance 1e-12.
SpectrumVerdict spectrum_classify(Cplx z);

/// 1/(1 - cos theta): the spectral-distance lower bound for
/// ||(e^{i theta} - T)^{-1}|| via the boundary point (1 + e^{2i theta})/2.
/// Satisfies 1/(1-cos theta) >= 2/theta^2 on (0, pi].
double resolvent_lower_bound(double theta);

struct KtNormOptions {
    bool full_sweep = false;    // default: every 4th row + argmax neighborhood
    int subsample_stride = 4;
    int refine_radius = 8;
    int threads = 0;            // 0 = CESARO_LAB_THREADS env or hardware_concurrency
};

/// Lower bound for ||T^n(I-T)|| from the leading N rows of C^n(I-C):
/// max over computed rows k < N of the absolute row sum.  Rows are exact
/// under truncation (lower triangularity) and computed matrix-free by
/// transpose iteration with O(k) suffix sums.
NormEstimate finite_section_kt_norm(std::size_t n, std::size_t N,
                                    const KtNormOptions& opts = {});

struct KtRow {
    std::size_t n = 0;
    std::size_t N = 0;
    double value = 0.0;
    double sqrt_scaled = 0.0;      // n^{1/2} * value
    double log_comparison = 0.0;   // (log n)^{1/2} / n^{1/2}, NaN at n = 0
    std::ptrdiff_t argmax_row = -1;
    bool boundary_saturated = false;
};

/// Batch table over an increasing n list; one row sweep covers all n
/// (checkpointing the transpose iteration), so the cost is that of the
/// largest power alone.
std::vector<KtRow> kt_decay_table(const std::vector<std::size_t>& n_list, std::size_t N,
                                  const KtNormOptions& opts = {});

/// Absolute row sum of row `k` of C^n(I-C) for each n in the increasing
/// list.  Row k of any power is supported on columns 0..k, so the value
/// carries no truncation dependence at all.
std::vector<double> kt_row_abs_sums(std::size_t k, const std::vector<std::size_t>& n_list);

}  // namespace cesaro

#endif
