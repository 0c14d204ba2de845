#include "cesaro/io.hpp"

#include <charconv>
#include <cmath>

namespace cesaro {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

Json complex_to_json(Cplx v) {
    if (v.imag() == 0.0) return Json(v.real());
    return Json::array({v.real(), v.imag()});
}

Cplx complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("complex scalar must be a number or [re, im]");
}

Json to_json(const ConvergentSeq& x) {
    Json prefix = Json::array();
    for (std::size_t k = 0; k < x.size(); ++k) prefix.push_back(complex_to_json(x[k]));
    return Json{{"prefix", std::move(prefix)}, {"limit", complex_to_json(x.limit())}};
}

ConvergentSeq seq_from_json(const Json& j) {
    if (!j.contains("prefix") || !j.contains("limit"))
        throw std::invalid_argument("sequence JSON needs \"prefix\" and \"limit\"");
    std::vector<Cplx> prefix;
    for (const auto& e : j.at("prefix")) prefix.push_back(complex_from_json(e));
    return ConvergentSeq(std::move(prefix), complex_from_json(j.at("limit")));
}

Json to_json(const DualFunctional& phi) {
    Json coeffs = Json::array();
    for (const Cplx& c : phi.coeffs) coeffs.push_back(complex_to_json(c));
    return Json{{"a_inf", complex_to_json(phi.a_inf)}, {"coeffs", std::move(coeffs)}};
}

DualFunctional dual_from_json(const Json& j) {
    DualFunctional phi;
    phi.a_inf = complex_from_json(j.at("a_inf"));
    for (const auto& e : j.at("coeffs")) phi.coeffs.push_back(complex_from_json(e));
    return phi;
}

Json to_json(const Verdict& v) {
    Json diags = Json::array();
    for (const Diagnostic& d : v.diagnostics)
        diags.push_back(Json{{"condition", d.condition},
                             {"value", d.value},
                             {"threshold", d.threshold}});
    return Json{{"status", membership_name(v.status)}, {"diagnostics", std::move(diags)}};
}

Json to_json(const RateFit& fit) {
    return Json{{"slope", fit.slope},
                {"intercept", fit.intercept},
                {"window", Json::array({fit.n_lo, fit.n_hi})},
                {"residual", fit.residual}};
}

FunctionHandle function_from_json(const Json& j) {
    const std::string space_s = j.at("space").get<std::string>();
    Space space;
    if (space_s == "interval")
        space = Space::interval;
    else if (space_s == "halfline")
        space = Space::halfline;
    else
        throw std::invalid_argument("function spec: space must be interval or halfline");

    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "poly") {
        std::vector<Cplx> coeffs;
        for (const auto& e : j.at("coeffs")) coeffs.push_back(complex_from_json(e));
        return FunctionHandle::poly(space, std::move(coeffs));
    }
    if (kind == "sinlog") return FunctionHandle::sinlog(space);
    if (kind == "samples") {
        std::vector<std::pair<double, Cplx>> pts;
        for (const auto& e : j.at("points")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("function spec: points are [t, value] pairs");
            pts.emplace_back(e[0].get<double>(), complex_from_json(e[1]));
        }
        Cplx lim{0.0, 0.0};
        if (j.contains("limit")) lim = complex_from_json(j.at("limit"));
        return FunctionHandle::samples(space, std::move(pts), lim);
    }
    throw std::invalid_argument("function spec: kind must be poly, sinlog or samples");
}

void write_param_header(std::ostream& os, const std::string& command,
                        const std::vector<std::pair<std::string, std::string>>& params) {
    os << "# cesaro-lab " << command << "\n";
    for (const auto& [k, v] : params) os << "# " << k << "=" << v << "\n";
}

void write_history_csv(std::ostream& os, const NormHistory& hist) {
    os << "n,value,sqrt_n_scaled,boundary_flag\n";
    for (const NormSample& s : hist.samples) {
        const double scaled =
            std::sqrt(static_cast<double>(std::max<std::size_t>(s.n, 1))) * s.value;
        os << s.n << "," << format_double(s.value) << "," << format_double(scaled) << ","
           << (s.boundary_saturated ? 1 : 0) << "\n";
    }
}

void write_kt_csv(std::ostream& os, const std::vector<KtRow>& rows) {
    os << "n,N,value,sqrt_scaled,argmax_row,boundary_flag,log_comparison\n";
    for (const KtRow& r : rows) {
        os << r.n << "," << r.N << "," << format_double(r.value) << ","
           << format_double(r.sqrt_scaled) << "," << r.argmax_row << ","
           << (r.boundary_saturated ? 1 : 0) << "," << format_double(r.log_comparison) << "\n";
    }
}

}  // namespace cesaro
