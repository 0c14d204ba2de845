#ifndef CESARO_RANGE_HPP
#define CESARO_RANGE_HPP

#include <span>
#include <string>
#include <vector>

#include "cesaro/seq.hpp"

namespace cesaro {

enum class Membership { member, non_member, inconclusive };

struct Diagnostic {
    std::string condition;
    double value = 0.0;
    double threshold = 0.0;
};

/// Every verdict carries the measured quantities its decision used.
struct Verdict {
    Membership status = Membership::inconclusive;
    std::vector<Diagnostic> diagnostics;
};

const char* membership_name(Membership m);

struct SeriesProbeOptions {
    double conv_tol_scale = 1e-6;  // tol_conv = scale * (1 + max |partial sum|)
    double div_tol = 0.10;         // sustained-growth slack across dyadic windows
};

/// Numerical convergence detector for sum(terms).  Partial sums are
/// examined over dyadic windows: convergent if the last window's
/// oscillation is below tol_conv; divergent if the window max magnitudes
/// grow monotonically with sustained increments across the last three
/// windows; inconclusive otherwise.  Heuristic by construction — every
/// measured quantity is returned in the diagnostics.
Verdict series_probe(std::span<const Cplx> terms, const SeriesProbeOptions& opts = {});

/// Membership in Ran(I-T) (order 1) or Ran(I-T)^2 (order 2):
/// order 1: x_0 = 0, lim x = 0 (exact to 1e-12) and sum x_k/k converges;
/// order 2 additionally: sum x_k/k = 0 (within the probe's own tail scale)
/// and lim_n sum_{k<=n} log(n/k) x_k/k exists.
Verdict range_membership(const ConvergentSeq& x, int order,
                         const SeriesProbeOptions& opts = {});

struct PreimageResult {
    ConvergentSeq y;
    /// |tail| scale of the partial-sum approximation to y's limit
    double limit_uncertainty = 0.0;
    /// set when the caller did not establish membership of x
    bool membership_warning = false;
};

/// Solve (I-T)y = x on the prefix: y_0 given, and for k >= 1
/// y_k = y_0 + (1 + 1/k) x_k + sum_{j=1}^{k-1} x_j / j  (running sum, O(N)).
/// y.limit is the partial-sum approximation y_0 + sum_{j>=1} x_j/j.
PreimageResult construct_preimage(const ConvergentSeq& x, Cplx y0,
                                  bool membership_checked = false);

}  // namespace cesaro

#endif
