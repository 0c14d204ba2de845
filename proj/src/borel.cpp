#include "cesaro/borel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cesaro/compensated.hpp"

namespace cesaro {

namespace {

double rule_mag(const TailRule& r, std::size_t k) {
    double v = std::abs(r.scale);
    if (r.power != 0.0) v /= std::pow(static_cast<double>(k + 1), r.power);
    if (r.log_power != 0.0) v /= std::pow(std::log(static_cast<double>(k + 2)), r.log_power);
    return v;
}

Cplx rule_value(const TailRule& r, std::size_t k) {
    double mag = rule_mag(r, k) / std::abs(r.scale);  // |scale| factored back in below
    if (r.kind == TailRule::Kind::alternating_reciprocal && k % 2 == 1) mag = -mag;
    return r.scale * mag;
}

bool rule_active(const TailRule& r) {
    return r.kind != TailRule::Kind::zero && std::abs(r.scale) != 0.0;
}

}  // namespace

Cplx CoeffSeq::at(std::size_t k) const {
    if (k < coeffs.size()) return coeffs[k];
    if (!rule_active(tail)) return {0.0, 0.0};
    return rule_value(tail, k);
}

double CoeffSeq::tail_envelope(std::size_t from) const {
    if (!rule_active(tail)) return 0.0;
    if (tail.power < 0.0 || tail.log_power < 0.0)
        throw std::invalid_argument("CoeffSeq: growing tail rule cannot be bounded");
    return rule_mag(tail, std::max(from, coeffs.size()));
}

double CoeffSeq::sup_abs() const {
    double m = tail_envelope(coeffs.size());
    for (const Cplx& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

bool CoeffSeq::decay_check() const {
    if (rule_active(tail)) {
        if (tail.power < 1.0) return false;
        if (tail.power == 1.0 && tail.log_power < 0.0) return false;
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!std::isfinite(static_cast<double>(k + 1) * std::abs(coeffs[k]))) return false;
    return true;
}

double CoeffSeq::tail_abs_sum(std::size_t from) const {
    if (!rule_active(tail)) return 0.0;
    if (tail.power <= 1.0) return std::numeric_limits<double>::infinity();
    const double p = tail.power;
    const std::size_t k0 = std::max<std::size_t>(std::max(from, coeffs.size()), 1);
    double bound = std::abs(tail.scale) * std::pow(static_cast<double>(k0), 1.0 - p) / (p - 1.0);
    if (tail.log_power > 0.0)
        bound /= std::pow(std::log(static_cast<double>(k0 + 2)), tail.log_power);
    return bound;
}

Cplx borel_eval(const CoeffSeq& a, double t) {
    if (t < 0.0) throw std::invalid_argument("borel_eval: t must be >= 0");
    const double sup = a.sup_abs();  // throws when the rule cannot be bounded
    if (t == 0.0) return a.at(0);

    // Poisson weights w_k = e^{-t} t^k/k!; sweep outward from the mode so
    // the w_{k+1} = w_k t/(k+1) recurrence never underflows prematurely.
    const std::size_t mode = static_cast<std::size_t>(t);
    const double logw_mode = -t + static_cast<double>(mode) * std::log(t) -
                             std::lgamma(static_cast<double>(mode) + 1.0);
    if (logw_mode < -700.0)
        throw QuadratureError("borel_eval: Poisson mode weight underflows", 0.0);
    const double w_mode = std::exp(logw_mode);

    NeumaierSumC acc;
    acc.add(w_mode * a.at(mode));
    // upward: once k >= t the weight ratio rho = t/(k+1) < 1, and the
    // remaining mass is below w_k rho/(1-rho)
    double w = w_mode;
    for (std::size_t k = mode + 1;; ++k) {
        w *= t / static_cast<double>(k);
        acc.add(w * a.at(k));
        const double rho = t / static_cast<double>(k + 1);
        if (rho < 1.0) {
            double rem = w * rho / (1.0 - rho);
            if (rem * std::max(sup, 1e-30) < 1e-15) break;
        }
        if (w < 1e-300) break;
    }
    // downward: remaining mass below w_k rho/(1-rho) with rho = k/t < 1
    w = w_mode;
    for (std::size_t k = mode; k-- > 0;) {
        w *= static_cast<double>(k + 1) / t;
        acc.add(w * a.at(k));
        const double rho = static_cast<double>(k) / t;
        double rem = rho < 1.0 ? w * rho / (1.0 - rho) : w * static_cast<double>(k);
        if (rem * std::max(sup, 1e-30) < 1e-15) break;
        if (w < 1e-300) break;
    }
    return acc.value();
}

BorelIntegral borel_integral(const CoeffSeq& a, const QuadratureConfig& cfg) {
    cfg.validate();
    constexpr double kHorizonCap = 1e8;
    constexpr int kMaxRounds = 28;
    // P(Pois(T) <= T/2) <= exp(-(1 - (1+ln2)/2) T)
    constexpr double kChernoffRate = 0.1534;

    const bool cert_possible = std::isfinite(a.tail_abs_sum(0));
    double stored_l1 = 0.0;
    for (const Cplx& c : a.coeffs) stored_l1 += std::abs(c);

    BorelIntegral out;
    NeumaierSumC value;
    NeumaierSum abs_value;
    double t_lo = 0.0, t_hi = 16.0;

    for (int round = 0;; ++round) {
        auto seg =
            integrate_adaptive_c([&](double t) { return borel_eval(a, t); }, t_lo, t_hi, cfg);
        auto seg_abs = integrate_adaptive([&](double t) { return std::abs(borel_eval(a, t)); },
                                          t_lo, t_hi, cfg);
        value.add(seg.value);
        abs_value.add(seg_abs.value);
        out.panels += seg.panels + seg_abs.panels;
        out.horizon = t_hi;
        const double increment = seg_abs.value;
        const double total = abs_value.value();

        // int_T^inf |f| <= (sum_{k<=T/2}|a_k|) P(Pois(T) <= T/2) + sum_{k>T/2}|a_k|
        const std::size_t half = static_cast<std::size_t>(t_hi / 2.0);
        double head_l1 = stored_l1;
        if (rule_active(a.tail) && half > a.coeffs.size())
            head_l1 += static_cast<double>(half - a.coeffs.size()) * a.tail_envelope(0);
        const double bound = head_l1 * std::exp(-kChernoffRate * t_hi) + a.tail_abs_sum(half);

        if (std::isfinite(bound) && bound < cfg.abs_tol) {
            out.certified = true;
            out.tail_bound = bound;
            break;
        }
        if (!cert_possible && round >= 2 &&
            increment < 0.01 * std::max(total, cfg.abs_tol)) {
            out.certified = false;
            out.tail_bound = increment;
            break;
        }
        if (t_hi >= kHorizonCap || round >= kMaxRounds) {
            out.certified = false;
            out.tail_bound = std::isfinite(bound) ? bound : increment;
            break;
        }
        t_lo = t_hi;
        t_hi *= 2.0;
    }
    out.value = value.value();
    out.abs_value = abs_value.value();
    return out;
}

Cplx abel_mean(const CoeffSeq& a, double r) {
    if (!(r > 1.0)) throw std::invalid_argument("abel_mean: r must exceed 1");
    const double sup = a.sup_abs();
    const double q = 1.0 / r;
    NeumaierSumC acc;
    double geom = q;  // 1/r^{k+1}
    for (std::size_t k = 0;; ++k) {
        acc.add(geom * a.at(k));
        const double env = k + 1 < a.coeffs.size() ? sup : a.tail_envelope(k + 1);
        if (env * geom * q / (1.0 - q) < 1e-15 && k + 1 >= a.coeffs.size()) break;
        if (geom < 1e-300) break;
        geom *= q;
    }
    return acc.value();
}

Cplx coeff_series_sum(const CoeffSeq& a, double tol) {
    NeumaierSumC acc;
    for (const Cplx& c : a.coeffs) acc.add(c);
    if (!rule_active(a.tail)) return acc.value();

    std::size_t k = a.coeffs.size();
    if (a.tail.kind == TailRule::Kind::alternating_reciprocal) {
        // alternating with monotone magnitudes: the midpoint of consecutive
        // partial sums has error <= |a_k - a_{k+1}|/2
        if (a.tail.power <= 0.0 && a.tail.log_power <= 0.0)
            throw std::invalid_argument("coeff_series_sum: alternating tail does not decay");
        for (std::size_t steps = 0; steps < 100'000'000; ++steps, ++k) {
            const double err = 0.5 * (rule_mag(a.tail, k) - rule_mag(a.tail, k + 1));
            if (steps > 4 && err < tol) return acc.value() + 0.5 * rule_value(a.tail, k);
            acc.add(a.at(k));
        }
        throw QuadratureError("coeff_series_sum: alternating tail did not meet tolerance", tol);
    }

    if (a.tail.power > 1.0 && a.tail.log_power == 0.0) {
        // Euler-Maclaurin: sum_{j>=k} g(j) = (k+1)^{1-p}/(p-1) g-scale + g(k)/2
        // with error below p g(k) / (12 (k+1))
        const double p = a.tail.power;
        for (std::size_t steps = 0;; ++steps, ++k) {
            const double em_err = p * rule_mag(a.tail, k) / (12.0 * (k + 1.0));
            if (steps > 4 && em_err < tol) {
                Cplx integral =
                    a.tail.scale * std::pow(static_cast<double>(k + 1), 1.0 - p) / (p - 1.0);
                return acc.value() + integral + 0.5 * rule_value(a.tail, k);
            }
            acc.add(a.at(k));
        }
    }

    // generic slow route: direct summation under the analytic remainder bound
    for (std::size_t steps = 0; steps < 100'000'000; ++steps, ++k) {
        acc.add(a.at(k));
        if (a.tail_abs_sum(k + 1) < tol) return acc.value();
    }
    throw QuadratureError("coeff_series_sum: tail did not meet tolerance", tol);
}

Verdict adell_lekuona_probe(const ConvergentSeq& x, const QuadratureConfig& cfg) {
    if (x.size() < 2)
        throw std::invalid_argument("adell_lekuona_probe: need at least two prefix entries");
    CoeffSeq a;
    a.coeffs.resize(x.size() - 1);
    for (std::size_t k = 0; k + 1 < x.size(); ++k)
        a.coeffs[k] = (x[k + 1] - x[0]) / static_cast<double>(k + 1);
    const Cplx tail_scale = x.limit() - x[0];
    if (std::abs(tail_scale) != 0.0) {
        a.tail.kind = TailRule::Kind::reciprocal_power;
        a.tail.scale = tail_scale;
        a.tail.power = 1.0;
    }

    Verdict v;
    v.diagnostics.push_back({"modeled_tail_scale", std::abs(tail_scale), 0.0});

    // horizon doubling on int |f| with a 1% stabilization threshold
    QuadratureConfig local = cfg;
    local.abs_tol = std::max(cfg.abs_tol, 1e-10);
    NeumaierSum abs_mass;
    double t_lo = 0.0, t_hi = 16.0;
    std::vector<double> increments;
    for (int round = 0; round < 16; ++round) {
        auto seg = integrate_adaptive([&](double t) { return std::abs(borel_eval(a, t)); },
                                      t_lo, t_hi, local, /*throw_on_fail=*/false);
        abs_mass.add(seg.value);
        increments.push_back(seg.value);
        const double total = abs_mass.value();
        if (increments.size() >= 2) {
            const double last = increments.back();
            const double prev = increments[increments.size() - 2];
            if (last < 0.01 * std::max(total, 1e-30)) {
                v.status = Membership::member;
                v.diagnostics.push_back({"abs_integral", total, 0.0});
                v.diagnostics.push_back(
                    {"last_doubling_fraction", last / std::max(total, 1e-300), 0.01});
                return v;
            }
            if (round >= 4 && last > 0.0 && prev > 0.0 && last >= 0.98 * prev) {
                v.status = Membership::non_member;
                v.diagnostics.push_back({"abs_integral", total, 0.0});
                v.diagnostics.push_back({"sustained_increment_ratio", last / prev, 0.98});
                return v;
            }
        }
        t_lo = t_hi;
        t_hi *= 2.0;
    }
    v.status = Membership::inconclusive;
    v.diagnostics.push_back({"abs_integral", abs_mass.value(), 0.0});
    return v;
}

CoeffSeq catalog_coeff_seq(std::string_view name) {
    CoeffSeq s;
    if (name == "unit0") {
        s.coeffs = {Cplx{1.0, 0.0}};
        return s;
    }
    if (name == "alternating") {
        s.tail.kind = TailRule::Kind::alternating_reciprocal;
        s.tail.scale = {1.0, 0.0};
        s.tail.power = 0.0;
        return s;
    }
    if (name == "alt-harmonic") {
        s.tail.kind = TailRule::Kind::alternating_reciprocal;
        s.tail.scale = {1.0, 0.0};
        s.tail.power = 1.0;
        return s;
    }
    if (name == "inv-square") {
        s.tail.kind = TailRule::Kind::reciprocal_power;
        s.tail.scale = {1.0, 0.0};
        s.tail.power = 2.0;
        return s;
    }
    if (name == "log-slow") {
        s.tail.kind = TailRule::Kind::reciprocal_power;
        s.tail.scale = {1.0, 0.0};
        s.tail.power = 1.0;
        s.tail.log_power = 1.0;
        return s;
    }
    throw std::invalid_argument("catalog_coeff_seq: unknown name '" + std::string(name) + "'");
}

std::vector<std::string> coeff_catalog_names() {
    return {"unit0", "alternating", "alt-harmonic", "inv-square", "log-slow"};
}

}  // namespace cesaro
