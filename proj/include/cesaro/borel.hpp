#ifndef CESARO_BOREL_HPP
#define CESARO_BOREL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cesaro/quadrature.hpp"
#include "cesaro/range.hpp"
#include "cesaro/seq.hpp"

namespace cesaro {

/// Closed-form generator for coefficients beyond the stored list; closed
/// forms (rather than callbacks) keep Poisson/geometric tail masses
/// analytically boundable.
struct TailRule {
    enum class Kind { zero, reciprocal_power, alternating_reciprocal };
    Kind kind = Kind::zero;
    Cplx scale{0.0, 0.0};
    double power = 1.0;      // exponent p in (k+1)^{-p}
    double log_power = 0.0;  // optional extra 1/log(k+2)^q factor
};

/// a_0..a_{K-1} stored, then the tail rule.
struct CoeffSeq {
    std::vector<Cplx> coeffs;
    TailRule tail;

    Cplx at(std::size_t k) const;
    /// monotone envelope sup_{k >= from} |a_k| (rule part; stored prefix
    /// handled by callers where needed)
    double tail_envelope(std::size_t from) const;
    /// sup over everything
    double sup_abs() const;
    /// the lemma hypothesis a_k = O(k^{-1}): sup (k+1)|a_k| finite
    bool decay_check() const;
    /// sum of |a_k| over k >= from when it converges (p > 1), else +inf
    double tail_abs_sum(std::size_t from) const;
};

/// f(t) = e^{-t} sum_k a_k t^k / k!, Poisson weights by the stable
/// recurrence, truncated once the remaining Poisson mass times the
/// coefficient envelope drops below 1e-15.
Cplx borel_eval(const CoeffSeq& a, double t);

struct BorelIntegral {
    Cplx value{0.0, 0.0};     // int_0^inf f
    double abs_value = 0.0;   // int_0^inf |f|
    double tail_bound = 0.0;  // certified bound on the omitted [T, inf) mass
    bool certified = false;   // tail bound analytic (else stabilization heuristic)
    double horizon = 0.0;     // final T
    int panels = 0;
};

/// int_0^inf f and int_0^inf |f| over a growing horizon; the horizon stops
/// when the remaining mass is certified below abs_tol (possible when
/// sum |a_k| converges) or, failing that, when the last doubling added
/// less than 1% of the accumulated |f| mass.
BorelIntegral borel_integral(const CoeffSeq& a, const QuadratureConfig& cfg);

/// sum_k a_k / r^{k+1}, r > 1, truncated under the geometric tail bound.
Cplx abel_mean(const CoeffSeq& a, double r);

/// Series sum (stored prefix + rule tail) for sequences passing the decay
/// check; tail summed numerically with a remainder below tol.
Cplx coeff_series_sum(const CoeffSeq& a, double tol = 1e-12);

/// Integrability probe for the moment condition: builds
/// a_k = (x_{k+1} - x_0)/(k+1) and watches int_0^T |f| over a doubling
/// horizon.  Beyond the stored prefix the coefficients are modeled by
/// (limit - x_0)/(k+1) (recorded in the diagnostics).
Verdict adell_lekuona_probe(const ConvergentSeq& x, const QuadratureConfig& cfg);

/// Named coefficient sequences exposed to the CLI:
/// unit0, alternating, alt-harmonic, inv-square, log-slow.
CoeffSeq catalog_coeff_seq(std::string_view name);
std::vector<std::string> coeff_catalog_names();

}  // namespace cesaro

#endif
