#ifndef CESARO_SEQ_HPP
#define CESARO_SEQ_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cesaro {

using Cplx = std::complex<double>;

enum class SumMode {
    plain,        // plain double accumulation
    compensated,  // Neumaier-compensated accumulation
    automatic,    // compensated once the prefix exceeds 10^6 entries
};

/// An element of the space c: a stored prefix x_0..x_{N-1} and the
/// authoritative limit lim_k x_k.  Coordinates beyond the prefix are not
/// stored; operations either stay exact under lower-triangularity or
/// carry a boundary flag.
class ConvergentSeq {
public:
    ConvergentSeq(std::vector<Cplx> prefix, Cplx limit);

    std::size_t size() const { return prefix_.size(); }
    const Cplx& operator[](std::size_t k) const { return prefix_[k]; }
    const std::vector<Cplx>& prefix() const { return prefix_; }
    Cplx limit() const { return limit_; }

    static ConvergentSeq constant(std::size_t n, Cplx value);
    /// e_inf = (1,1,1,...), limit 1
    static ConvergentSeq ones(std::size_t n);
    /// e_k = unit coordinate vector, limit 0
    static ConvergentSeq unit(std::size_t n, std::size_t k);

private:
    std::vector<Cplx> prefix_;
    Cplx limit_;
};

/// Truncated sup-norm report: prefix max combined with the limit term.
/// argmax_index = -1 means the limit-difference term attained the max
/// (that term is exact, so it never sets the boundary flag).
struct NormEstimate {
    double value = 0.0;
    std::ptrdiff_t argmax_index = -1;
    bool boundary_saturated = false;
    std::size_t truncation = 0;
};

/// Finitely supported element of c*: phi(x) = a_inf * lim x + sum_k a_k x_k.
struct DualFunctional {
    Cplx a_inf{0.0, 0.0};
    std::vector<Cplx> coeffs;

    /// l^1 representation norm |a_inf| + sum |a_k|; equals the dual norm
    /// for finitely supported functionals.
    double rep_norm() const;

    static DualFunctional pi(std::size_t k);
    static DualFunctional pi_inf();
};

/// Index of a coordinate functional, or the limit functional.
struct FunctionalIndex {
    bool is_inf = false;
    std::size_t k = 0;
    static FunctionalIndex at(std::size_t k) { return {false, k}; }
    static FunctionalIndex inf() { return {true, 0}; }
};

/// Tx, entry k = (1/(k+1)) sum_{j<=k} x_j via one running prefix sum.
/// The limit is preserved (pi_inf is fixed by T).
ConvergentSeq cesaro_apply(const ConvergentSeq& x, SumMode mode = SumMode::automatic);

/// Px = pi_0(x) e_inf.
ConvergentSeq project_P(const ConvergentSeq& x);

/// (I - T)x; prefix exact, limit = x.limit - x.limit = 0 preserved exactly
/// when x converges (kept as x.limit - lim Tx).
ConvergentSeq apply_i_minus_t(const ConvergentSeq& x, SumMode mode = SumMode::automatic);

/// pi_k(x) or pi_inf(x); out-of-range index throws (no extrapolation).
Cplx functional_eval(const ConvergentSeq& x, FunctionalIndex index);

/// max over prefix of |x_k - y_k| combined with |lim x - lim y|.
NormEstimate sup_distance(const ConvergentSeq& x, const ConvergentSeq& y);

/// Dual operator S: (a_inf, a) -> (a_inf, b) with b_j = sum_{k>=j} a_k/(k+1).
/// Finite support is preserved exactly; the representation norm never grows.
DualFunctional dual_apply(const DualFunctional& phi);

/// Q phi = xi_0(phi) pi_0 + xi_inf(phi) pi_inf with xi_0 = sum_k a_k and
/// xi_inf = a_inf for finitely supported phi.
DualFunctional dual_project_Q(const DualFunctional& phi);

/// l^1 representation distance between two functionals.
double dual_distance(const DualFunctional& a, const DualFunctional& b);

}  // namespace cesaro

#endif
