// cesaro-lab: command-line orchestrator for the Cesaro-operator experiments.
// Exit codes: 0 success, 1 input error, 2 numerical failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cesaro/io.hpp"
#include "cesaro/laguerre.hpp"

using namespace cesaro;

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    return os;
}

/// Emit to the given path or stdout.
void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
    } else {
        auto os = open_out(path);
        writer(os);
    }
}

Json params_json(const Params& params) {
    Json j = Json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    is >> j;
    return j;
}

Cplx parse_complex_flag(const std::string& s) {
    std::istringstream is(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw std::invalid_argument("cannot parse scalar: " + s);
    if (is >> comma) {
        if (comma != ',' || !(is >> im))
            throw std::invalid_argument("cannot parse scalar: " + s);
    }
    return {re, im};
}

ConvergentSeq generate_sequence(const std::string& name, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    if (name == "einf") return ConvergentSeq::ones(n);
    if (name == "e0") return ConvergentSeq::unit(n, 0);
    if (name == "slowlog") {
        std::vector<Cplx> p(n);
        p[0] = 0.0;
        for (std::size_t k = 1; k < n; ++k)
            p[k] = 1.0 / std::log(static_cast<double>(k) + 2.0);
        return ConvergentSeq(std::move(p), 0.0);
    }
    if (name == "random") {
        std::vector<Cplx> p(n);
        for (auto& v : p) v = Cplx{uni(rng), 0.0};
        return ConvergentSeq(std::move(p), 0.0);
    }
    if (name == "range1" || name == "range2") {
        std::vector<Cplx> p(n);
        for (auto& v : p) v = Cplx{uni(rng), 0.0};
        ConvergentSeq y(std::move(p), 0.0);
        ConvergentSeq x = apply_i_minus_t(y);
        if (name == "range2") x = apply_i_minus_t(x);
        return x;
    }
    throw std::invalid_argument("unknown generator: " + name +
                                " (einf, e0, slowlog, random, range1, range2)");
}

NormHistory read_history_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open input file: " + path);
    NormHistory hist;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
        std::istringstream ls(line);
        NormSample s;
        char c;
        double scaled;
        int flag;
        if (ls >> s.n >> c >> s.value >> c >> scaled >> c >> flag) {
            s.boundary_saturated = flag != 0;
            hist.samples.push_back(s);
        }
    }
    if (hist.samples.empty()) throw std::invalid_argument("no samples in " + path);
    return hist;
}

std::vector<std::size_t> schedule_to(std::size_t nmax) {
    auto s = dyadic_schedule(nmax);
    if (s.empty()) throw std::invalid_argument("empty schedule (nmax must be >= 1)");
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cesaro-lab: orbits, rates, ranges and spectra of the Cesaro operator"};
    app.require_subcommand(1);

    QuadratureConfig cfg;
    std::uint64_t seed = 12345;
    int threads = 0;
    app.add_option("--seed", seed, "seed for randomized inputs (recorded in outputs)");
    app.add_option("--threads", threads, "worker count for parallel regions (0 = auto)");
    app.add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
    app.add_option("--tail-tol", cfg.tail_mass_tol, "improper-integral tail mass tolerance");

    // --- orbit ---------------------------------------------------------
    auto* orbit = app.add_subcommand("orbit", "norm history of T^n x against Px");
    std::string orbit_input, orbit_gen = "range1", orbit_out;
    std::size_t orbit_N = 100000, orbit_nmax = 1024;
    orbit->add_option("--input", orbit_input, "sequence JSON file");
    orbit->add_option("--gen", orbit_gen, "built-in generator when no input file");
    auto* orbit_N_opt =
        orbit->add_option("--N", orbit_N, "truncation length (generators; prefix cut for files)");
    orbit->add_option("--nmax", orbit_nmax, "largest power (dyadic schedule)");
    orbit->add_option("--out", orbit_out, "output CSV (default stdout)");

    // --- rate ----------------------------------------------------------
    auto* rate = app.add_subcommand("rate", "log-log slope of a norm history CSV");
    std::string rate_input, rate_out;
    std::size_t rate_lo = 0, rate_hi = 0;
    rate->add_option("--input", rate_input, "history CSV")->required();
    rate->add_option("--lo", rate_lo, "window lower n (default n_max/8)");
    rate->add_option("--hi", rate_hi, "window upper n (default n_max)");
    rate->add_option("--out", rate_out, "output JSON (default stdout)");

    // --- range-check ---------------------------------------------------
    auto* rangec = app.add_subcommand("range-check", "membership in Ran(I-T) or Ran(I-T)^2");
    std::string rangec_input, rangec_out;
    int rangec_order = 1;
    rangec->add_option("--input", rangec_input, "sequence JSON")->required();
    rangec->add_option("--order", rangec_order, "1 or 2");
    rangec->add_option("--out", rangec_out, "output JSON (default stdout)");

    // --- preimage ------------------------------------------------------
    auto* pre = app.add_subcommand("preimage", "solve (I-T)y = x");
    std::string pre_input, pre_out, pre_y0 = "0";
    pre->add_option("--input", pre_input, "sequence JSON")->required();
    pre->add_option("--y0", pre_y0, "free first entry, re[,im]");
    pre->add_option("--out", pre_out, "output JSON (default stdout)");

    // --- laguerre ------------------------------------------------------
    auto* lag = app.add_subcommand("laguerre", "generalized Laguerre L_n^{(1)} tools");
    lag->require_subcommand(1);
    int lag_n = 10;
    double lag_t = 1.0, lag_alpha = 0.25;
    std::size_t lag_nmax = 40;
    std::string lag_out;
    auto* lag_eval = lag->add_subcommand("eval", "evaluate L_n^{(1)}(t)");
    lag_eval->add_option("--n", lag_n)->required();
    lag_eval->add_option("--t", lag_t)->required();
    auto* lag_signed = lag->add_subcommand("signed", "closed-form signed integral");
    lag_signed->add_option("--n", lag_n)->required();
    lag_signed->add_option("--alpha", lag_alpha);
    auto* lag_abs = lag->add_subcommand("abs", "weighted absolute integral");
    lag_abs->add_option("--n", lag_n)->required();
    lag_abs->add_option("--alpha", lag_alpha);
    auto* lag_ratio = lag->add_subcommand("ratio", "asymptotic ratio table");
    lag_ratio->add_option("--alpha", lag_alpha);
    lag_ratio->add_option("--nmax", lag_nmax);
    lag_ratio->add_option("--out", lag_out, "output CSV (default stdout)");

    // --- talpha --------------------------------------------------------
    auto* tal = app.add_subcommand("talpha", "shifted operator T_alpha entries and bounds");
    std::string tal_input, tal_out;
    double tal_alpha = 0.25;
    std::size_t tal_k = 0, tal_n = 1, tal_nmax = 0;
    tal->add_option("--alpha", tal_alpha, "shift in (0,1)");
    tal->add_option("--input", tal_input, "sequence JSON (entry mode)");
    tal->add_option("--k", tal_k, "coordinate (entry mode)");
    tal->add_option("--n", tal_n, "power (entry mode)");
    tal->add_option("--bound-nmax", tal_nmax, "emit the norm-bound table up to this n");
    tal->add_option("--out", tal_out, "output (default stdout)");

    // --- opnorm --------------------------------------------------------
    auto* op = app.add_subcommand("opnorm", "finite-section norms of C^n(I-C)");
    std::size_t op_N = 4096, op_nmax = 512;
    bool op_full = false;
    std::string op_out;
    op->add_option("--N", op_N, "truncation size");
    op->add_option("--nmax", op_nmax, "largest power (dyadic)");
    op->add_flag("--full-sweep", op_full, "sweep every row (default: stride 4 + refinement)");
    op->add_option("--out", op_out, "output CSV (default stdout)");

    // --- spectrum / resolvent -----------------------------------------
    auto* spec = app.add_subcommand("spectrum", "classify z against sigma(T)");
    std::string spec_z = "1";
    spec->add_option("--z", spec_z, "complex point, re[,im]")->required();
    auto* resv = app.add_subcommand("resolvent", "resolvent lower bound at e^{i theta}");
    double resv_theta = M_PI;
    resv->add_option("--theta", resv_theta)->required();

    // --- borel ---------------------------------------------------------
    auto* bor = app.add_subcommand("borel", "Borel transform and Abel means");
    bor->require_subcommand(1);
    std::string bor_seq = "alt-harmonic", bor_out, bor_input;
    double bor_r = 1.01;
    auto* bor_int = bor->add_subcommand("integral", "int f and int |f| vs the series sum");
    bor_int->add_option("--seq", bor_seq, "catalog name");
    bor_int->add_option("--out", bor_out);
    auto* bor_abel = bor->add_subcommand("abel", "Abel mean at r > 1");
    bor_abel->add_option("--seq", bor_seq, "catalog name");
    bor_abel->add_option("--r", bor_r);
    auto* bor_probe = bor->add_subcommand("al-probe", "moment-integrability probe");
    bor_probe->add_option("--input", bor_input, "sequence JSON")->required();
    bor_probe->add_option("--out", bor_out);

    // --- continuous ----------------------------------------------------
    auto* cont = app.add_subcommand("continuous", "Cesaro operator on C[0,1] / C_inf[0,inf)");
    cont->require_subcommand(1);
    std::string cont_fn, cont_out;
    std::size_t cont_nmax = 64, cont_grid = 65, cont_lo = 0, cont_hi = 0;
    bool cont_centered = false;
    auto* cont_orbit = cont->add_subcommand("orbit", "grid-sup norm history of T^n f");
    cont_orbit->add_option("--fn", cont_fn, "function spec JSON")->required();
    cont_orbit->add_option("--nmax", cont_nmax);
    cont_orbit->add_option("--grid", cont_grid);
    cont_orbit->add_option("--out", cont_out);
    auto* cont_rate = cont->add_subcommand("rate", "orbit history plus fitted slope");
    cont_rate->add_option("--fn", cont_fn, "function spec JSON")->required();
    cont_rate->add_option("--nmax", cont_nmax);
    cont_rate->add_option("--grid", cont_grid);
    cont_rate->add_option("--lo", cont_lo, "fit window lower n (default nmax/8)");
    cont_rate->add_option("--hi", cont_hi, "fit window upper n (default nmax)");
    cont_rate->add_option("--out", cont_out);
    auto* cont_range = cont->add_subcommand("range", "membership via improper integrals");
    cont_range->add_option("--fn", cont_fn, "function spec JSON")->required();
    cont_range->add_flag("--centered", cont_centered, "subtract f(0) first");
    cont_range->add_option("--out", cont_out);
    auto* cont_pre = cont->add_subcommand("preimage", "h with (I-T)h = f, sampled");
    cont_pre->add_option("--fn", cont_fn, "function spec JSON")->required();
    cont_pre->add_option("--grid", cont_grid);
    cont_pre->add_option("--out", cont_out);

    // --- dual ----------------------------------------------------------
    auto* dual = app.add_subcommand("dual", "dual operator S on finitely supported functionals");
    dual->require_subcommand(1);
    std::size_t dual_k = 5, dual_nmax = 4096;
    std::string dual_out;
    auto* dual_orbit = dual->add_subcommand("orbit", "l1 distance of S^n pi_k from pi_0");
    dual_orbit->add_option("--k", dual_k);
    dual_orbit->add_option("--nmax", dual_nmax);
    dual_orbit->add_option("--out", dual_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // prints usage; nonzero on bad flags
    }

    try {
        cfg.validate();
        Params base{{"seed", std::to_string(seed)},
                    {"rel_tol", format_double(cfg.rel_tol)},
                    {"abs_tol", format_double(cfg.abs_tol)},
                    {"tail_mass_tol", format_double(cfg.tail_mass_tol)}};

        if (*orbit) {
            ConvergentSeq x = orbit_input.empty()
                                  ? generate_sequence(orbit_gen, orbit_N, seed)
                                  : seq_from_json(read_json_file(orbit_input));
            if (!orbit_input.empty() && orbit_N_opt->count() > 0) {
                if (orbit_N > x.size())
                    throw std::invalid_argument(
                        "orbit: --N exceeds the stored prefix (tails are not extrapolated)");
                std::vector<Cplx> cut(x.prefix().begin(), x.prefix().begin() + orbit_N);
                x = ConvergentSeq(std::move(cut), x.limit());
            }
            NormHistory hist = orbit_norms(x, schedule_to(orbit_nmax));
            Params p = base;
            p.emplace_back("input", orbit_input.empty() ? "gen:" + orbit_gen : orbit_input);
            p.emplace_back("N", std::to_string(x.size()));
            p.emplace_back("nmax", std::to_string(orbit_nmax));
            emit(orbit_out, [&](std::ostream& os) {
                write_param_header(os, "orbit", p);
                write_history_csv(os, hist);
            });
        } else if (*rate) {
            NormHistory hist = read_history_csv(rate_input);
            const std::size_t n_max = hist.samples.back().n;
            if (rate_hi == 0) rate_hi = n_max;
            if (rate_lo == 0) rate_lo = std::max<std::size_t>(1, n_max / 8);
            RateFit fit = fit_rate(hist, rate_lo, rate_hi);
            Params p = base;
            p.emplace_back("input", rate_input);
            Json out = to_json(fit);
            out["params"] = params_json(p);
            emit(rate_out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
        } else if (*rangec) {
            ConvergentSeq x = seq_from_json(read_json_file(rangec_input));
            Verdict v = range_membership(x, rangec_order);
            Params p = base;
            p.emplace_back("input", rangec_input);
            p.emplace_back("order", std::to_string(rangec_order));
            Json out = to_json(v);
            out["params"] = params_json(p);
            emit(rangec_out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
        } else if (*pre) {
            ConvergentSeq x = seq_from_json(read_json_file(pre_input));
            Verdict v = range_membership(x, 1);
            PreimageResult r =
                construct_preimage(x, parse_complex_flag(pre_y0), v.status == Membership::member);
            Json out = to_json(r.y);
            out["limit_uncertainty"] = r.limit_uncertainty;
            out["membership"] = membership_name(v.status);
            out["membership_warning"] = r.membership_warning;
            Params p = base;
            p.emplace_back("input", pre_input);
            p.emplace_back("y0", pre_y0);
            out["params"] = params_json(p);
            emit(pre_out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
        } else if (*lag) {
            if (*lag_eval) {
                std::cout << format_double(laguerre_eval(lag_n, lag_t)) << "\n";
            } else if (*lag_signed) {
                std::cout << format_double(laguerre_signed_integral(lag_n, lag_alpha)) << "\n";
            } else if (*lag_abs) {
                std::cout << format_double(laguerre_abs_integral(lag_n, lag_alpha, cfg)) << "\n";
            } else if (*lag_ratio) {
                Params p = base;
                p.emplace_back("alpha", format_double(lag_alpha));
                p.emplace_back("nmax", std::to_string(lag_nmax));
                emit(lag_out, [&](std::ostream& os) {
                    write_param_header(os, "laguerre ratio", p);
                    os << "n,alpha,abs_integral,signed_closed_form,ratio\n";
                    for (std::size_t n = 1; n <= lag_nmax; n *= 2) {
                        double ai = laguerre_abs_integral(static_cast<int>(n), lag_alpha, cfg);
                        double si = laguerre_signed_integral(static_cast<int>(n), lag_alpha);
                        double r = laguerre_asymptotic_ratio(static_cast<int>(n), lag_alpha, cfg);
                        os << n << "," << format_double(lag_alpha) << "," << format_double(ai)
                           << "," << format_double(si) << "," << format_double(r) << "\n";
                    }
                });
            }
        } else if (*tal) {
            if (tal_nmax > 0) {
                Params p = base;
                p.emplace_back("alpha", format_double(tal_alpha));
                p.emplace_back("nmax", std::to_string(tal_nmax));
                emit(tal_out, [&](std::ostream& os) {
                    write_param_header(os, "talpha bound", p);
                    os << "n,bound\n";
                    for (std::size_t n = 1; n <= tal_nmax; ++n)
                        os << n << "," << format_double(talpha_norm_bound(tal_alpha, n, cfg))
                           << "\n";
                });
            } else {
                if (tal_input.empty())
                    throw std::invalid_argument("talpha: need --input (or --bound-nmax)");
                ConvergentSeq x = seq_from_json(read_json_file(tal_input));
                Cplx v = talpha_entry(x, tal_k, tal_n, tal_alpha, cfg);
                std::cout << complex_to_json(v).dump() << "\n";
            }
        } else if (*op) {
            KtNormOptions opts;
            opts.full_sweep = op_full;
            opts.threads = threads;
            std::vector<std::size_t> ns = schedule_to(op_nmax);
            auto table = kt_decay_table(ns, op_N, opts);
            Params p = base;
            p.emplace_back("N", std::to_string(op_N));
            p.emplace_back("nmax", std::to_string(op_nmax));
            p.emplace_back("full_sweep", op_full ? "1" : "0");
            emit(op_out, [&](std::ostream& os) {
                write_param_header(os, "opnorm", p);
                write_kt_csv(os, table);
            });
        } else if (*spec) {
            SpectrumVerdict v = spectrum_classify(parse_complex_flag(spec_z));
            const char* loc = v.location == SpectrumLocation::interior   ? "interior"
                              : v.location == SpectrumLocation::boundary ? "boundary"
                                                                         : "exterior";
            std::cout << Json{{"location", loc},
                              {"distance_to_boundary", v.distance_to_boundary}}
                             .dump(2)
                      << "\n";
        } else if (*resv) {
            std::cout << format_double(resolvent_lower_bound(resv_theta)) << "\n";
        } else if (*bor) {
            if (*bor_int) {
                CoeffSeq a = catalog_coeff_seq(bor_seq);
                BorelIntegral bi = borel_integral(a, cfg);
                Json out{{"seq", bor_seq},
                         {"value", complex_to_json(bi.value)},
                         {"abs_value", bi.abs_value},
                         {"tail_bound", bi.tail_bound},
                         {"certified", bi.certified},
                         {"horizon", bi.horizon},
                         {"decay_hypothesis_ok", a.decay_check()},
                         {"params", params_json(base)}};
                emit(bor_out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
            } else if (*bor_abel) {
                CoeffSeq a = catalog_coeff_seq(bor_seq);
                std::cout << complex_to_json(abel_mean(a, bor_r)).dump() << "\n";
            } else if (*bor_probe) {
                ConvergentSeq x = seq_from_json(read_json_file(bor_input));
                Verdict v = adell_lekuona_probe(x, cfg);
                Params p = base;
                p.emplace_back("input", bor_input);
                Json out = to_json(v);
                out["params"] = params_json(p);
                emit(bor_out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
            }
        } else if (*cont) {
            FunctionHandle f = function_from_json(read_json_file(cont_fn));
            if (*cont_orbit || *cont_rate) {
                NormHistory hist = orbit_norms_fn(f, schedule_to(cont_nmax), cont_grid, cfg);
                Params p = base;
                p.emplace_back("fn", cont_fn);
                p.emplace_back("nmax", std::to_string(cont_nmax));
                p.emplace_back("grid", std::to_string(cont_grid));
                p.emplace_back("halfline_grid_policy", "log-uniform to n+4*sqrt(n)+6, cap 690");
                emit(cont_out, [&](std::ostream& os) {
                    write_param_header(os, *cont_orbit ? "continuous orbit" : "continuous rate",
                                       p);
                    write_history_csv(os, hist);
                    if (*cont_rate) {
                        if (cont_hi == 0) cont_hi = cont_nmax;
                        if (cont_lo == 0) cont_lo = std::max<std::size_t>(1, cont_nmax / 8);
                        RateFit fit = fit_rate(hist, cont_lo, cont_hi);
                        os << "# fit " << to_json(fit).dump() << "\n";
                    }
                });
            } else if (*cont_range) {
                Verdict v = range_membership_fn(
                    f, cont_centered ? MembershipMode::centered : MembershipMode::raw, cfg);
                Params p = base;
                p.emplace_back("fn", cont_fn);
                p.emplace_back("centered", cont_centered ? "1" : "0");
                Json out = to_json(v);
                out["params"] = params_json(p);
                emit(cont_out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
            } else if (*cont_pre) {
                FunctionHandle h = construct_preimage_fn(f, cfg);
                FunctionHandle th = cesaro_apply_fn(h, cfg);
                Params p = base;
                p.emplace_back("fn", cont_fn);
                emit(cont_out, [&](std::ostream& os) {
                    write_param_header(os, "continuous preimage", p);
                    os << "t,h,residual\n";  // residual = |(I-T)h - f|
                    for (std::size_t i = 0; i < cont_grid; ++i) {
                        double t = static_cast<double>(i) / static_cast<double>(cont_grid - 1);
                        if (f.space() == Space::halfline) t = std::exp(-4.0 + 12.0 * t);
                        Cplx hv = h(t);
                        double res = std::abs(hv - th(t) - f(t));
                        os << format_double(t) << "," << complex_to_json(hv).dump() << ","
                           << format_double(res) << "\n";
                    }
                });
            }
        } else if (*dual) {
            Params p = base;
            p.emplace_back("k", std::to_string(dual_k));
            p.emplace_back("nmax", std::to_string(dual_nmax));
            emit(dual_out, [&](std::ostream& os) {
                write_param_header(os, "dual orbit", p);
                os << "n,norm,log10_norm\n";
                DualFunctional phi = DualFunctional::pi(dual_k);
                const DualFunctional pi0 = DualFunctional::pi(0);
                // scaled companion iteration on pi_k - pi_0: the raw double
                // route floors near 1e-16, the deflated log-space route does
                // not (xi_0 = 0 is exact for this difference and Ker Q is
                // S-invariant, so removing the leaked pi_0 mode is a no-op
                // in exact arithmetic)
                std::vector<Cplx> d(dual_k + 1, Cplx{0.0, 0.0});
                d[0] = Cplx{-0.5, 0.0};
                d[dual_k] += Cplx{0.5, 0.0};
                double log_norm = std::log(2.0);
                for (std::size_t n = 1; n <= dual_nmax; ++n) {
                    phi = dual_apply(phi);
                    Cplx suffix{0.0, 0.0};
                    for (std::size_t j = d.size(); j-- > 0;) {
                        suffix += d[j] / static_cast<double>(j + 1);
                        d[j] = suffix;
                    }
                    Cplx leak{0.0, 0.0};
                    for (const auto& v : d) leak += v;
                    d[0] -= leak;
                    double nrm = 0.0;
                    for (const auto& v : d) nrm += std::abs(v);
                    if (nrm > 0.0) {
                        log_norm += std::log(nrm);
                        for (auto& v : d) v /= nrm;
                    } else {
                        log_norm = -std::numeric_limits<double>::infinity();
                    }
                    if ((n & (n - 1)) == 0 || n == dual_nmax)
                        os << n << "," << format_double(dual_distance(phi, pi0)) << ","
                           << format_double(log_norm / std::log(10.0)) << "\n";
                }
            });
        }
        return 0;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
