#include "cesaro/seq.hpp"

#include <algorithm>
#include <cmath>

#include "cesaro/compensated.hpp"

namespace cesaro {

namespace {

bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

bool use_compensation(SumMode mode, std::size_t n) {
    switch (mode) {
        case SumMode::plain: return false;
        case SumMode::compensated: return true;
        case SumMode::automatic: return n > 1'000'000;
    }
    return false;
}

}  // namespace

ConvergentSeq::ConvergentSeq(std::vector<Cplx> prefix, Cplx limit)
    : prefix_(std::move(prefix)), limit_(limit) {
    if (prefix_.empty()) throw std::invalid_argument("ConvergentSeq: prefix must be non-empty");
    if (!finite(limit_)) throw std::invalid_argument("ConvergentSeq: limit must be finite");
    for (const Cplx& v : prefix_)
        if (!finite(v)) throw std::invalid_argument("ConvergentSeq: entries must be finite");
}

ConvergentSeq ConvergentSeq::constant(std::size_t n, Cplx value) {
    return ConvergentSeq(std::vector<Cplx>(n, value), value);
}

ConvergentSeq ConvergentSeq::ones(std::size_t n) { return constant(n, Cplx{1.0, 0.0}); }

ConvergentSeq ConvergentSeq::unit(std::size_t n, std::size_t k) {
    if (k >= n) throw std::invalid_argument("ConvergentSeq::unit: k must lie in the prefix");
    std::vector<Cplx> p(n, Cplx{0.0, 0.0});
    p[k] = Cplx{1.0, 0.0};
    return ConvergentSeq(std::move(p), Cplx{0.0, 0.0});
}

ConvergentSeq cesaro_apply(const ConvergentSeq& x, SumMode mode) {
    const std::size_t n = x.size();
    std::vector<Cplx> out(n);
    if (use_compensation(mode, n)) {
        NeumaierSum re, im;
        for (std::size_t k = 0; k < n; ++k) {
            re.add(x[k].real());
            im.add(x[k].imag());
            out[k] = Cplx{re.value(), im.value()} / static_cast<double>(k + 1);
        }
    } else {
        Cplx run{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            run += x[k];
            out[k] = run / static_cast<double>(k + 1);
        }
    }
    return ConvergentSeq(std::move(out), x.limit());
}

ConvergentSeq project_P(const ConvergentSeq& x) {
    return ConvergentSeq::constant(x.size(), x[0]);
}

ConvergentSeq apply_i_minus_t(const ConvergentSeq& x, SumMode mode) {
    ConvergentSeq tx = cesaro_apply(x, mode);
    std::vector<Cplx> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - tx[k];
    return ConvergentSeq(std::move(out), x.limit() - tx.limit());
}

Cplx functional_eval(const ConvergentSeq& x, FunctionalIndex index) {
    if (index.is_inf) return x.limit();
    if (index.k >= x.size())
        throw std::out_of_range("functional_eval: coordinate beyond stored prefix");
    return x[index.k];
}

NormEstimate sup_distance(const ConvergentSeq& x, const ConvergentSeq& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("sup_distance: prefix lengths differ");
    const std::size_t n = x.size();
    NormEstimate est;
    est.truncation = n;
    double best = -1.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = std::abs(x[k] - y[k]);
        if (d > best) {
            best = d;
            best_k = k;
        }
    }
    double limit_term = std::abs(x.limit() - y.limit());
    if (limit_term > best) {
        est.value = limit_term;
        est.argmax_index = -1;  // the (exact) tail term dominates
        est.boundary_saturated = false;
    } else {
        est.value = best;
        est.argmax_index = static_cast<std::ptrdiff_t>(best_k);
        est.boundary_saturated = best_k + std::max<std::size_t>(1, n / 20) >= n;
    }
    return est;
}

double DualFunctional::rep_norm() const {
    NeumaierSum s;
    s.add(std::abs(a_inf));
    for (const Cplx& c : coeffs) s.add(std::abs(c));
    return s.value();
}

DualFunctional DualFunctional::pi(std::size_t k) {
    DualFunctional p;
    p.coeffs.assign(k + 1, Cplx{0.0, 0.0});
    p.coeffs[k] = Cplx{1.0, 0.0};
    return p;
}

DualFunctional DualFunctional::pi_inf() {
    DualFunctional p;
    p.a_inf = Cplx{1.0, 0.0};
    return p;
}

DualFunctional dual_apply(const DualFunctional& phi) {
    DualFunctional out;
    out.a_inf = phi.a_inf;
    out.coeffs.assign(phi.coeffs.size(), Cplx{0.0, 0.0});
    Cplx suffix{0.0, 0.0};
    for (std::size_t j = phi.coeffs.size(); j-- > 0;) {
        suffix += phi.coeffs[j] / static_cast<double>(j + 1);
        out.coeffs[j] = suffix;
    }
    return out;
}

DualFunctional dual_project_Q(const DualFunctional& phi) {
    NeumaierSumC xi0;
    for (const Cplx& c : phi.coeffs) xi0.add(c);
    DualFunctional out;
    out.a_inf = phi.a_inf;
    out.coeffs.assign(1, xi0.value());
    return out;
}

double dual_distance(const DualFunctional& a, const DualFunctional& b) {
    DualFunctional d;
    d.a_inf = a.a_inf - b.a_inf;
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    d.coeffs.assign(n, Cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        Cplx av = i < a.coeffs.size() ? a.coeffs[i] : Cplx{0.0, 0.0};
        Cplx bv = i < b.coeffs.size() ? b.coeffs[i] : Cplx{0.0, 0.0};
        d.coeffs[i] = av - bv;
    }
    return d.rep_norm();
}

}  // namespace cesaro
