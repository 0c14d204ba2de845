#ifndef CESARO_IO_HPP
#define CESARO_IO_HPP

#include <json.hpp>
#include <ostream>
#include <string>

#include "cesaro/borel.hpp"
#include "cesaro/continuous.hpp"
#include "cesaro/orbit.hpp"
#include "cesaro/range.hpp"
#include "cesaro/seq.hpp"
#include "cesaro/spectral.hpp"

namespace cesaro {

using Json = nlohmann::json;

/// shortest round-trip decimal for a double (std::to_chars)
std::string format_double(double v);

/// complex scalars serialize as a bare number when real, else [re, im]
Json complex_to_json(Cplx v);
Cplx complex_from_json(const Json& j);

// Sequence JSON: {"prefix": [...], "limit": ...}
Json to_json(const ConvergentSeq& x);
ConvergentSeq seq_from_json(const Json& j);

// Dual JSON: {"a_inf": ..., "coeffs": [...]}
Json to_json(const DualFunctional& phi);
DualFunctional dual_from_json(const Json& j);

// Verdict JSON: {"status": ..., "diagnostics": [{"condition","value","threshold"}]}
Json to_json(const Verdict& v);

// RateFit JSON: {"slope","intercept","window":[lo,hi],"residual"}
Json to_json(const RateFit& fit);

// Function spec JSON: {"space": "interval"|"halfline",
//                      "kind": "poly"|"sinlog"|"samples", "coeffs"|"points": ...}
FunctionHandle function_from_json(const Json& j);

/// "# key=value" parameter header lines; every output file embeds the full
/// resolved parameter set for reproducibility
void write_param_header(std::ostream& os, const std::string& command,
                        const std::vector<std::pair<std::string, std::string>>& params);

/// NormHistory CSV: n,value,sqrt_n_scaled,boundary_flag
void write_history_csv(std::ostream& os, const NormHistory& hist);

/// KT table CSV: n,N,value,sqrt_scaled,argmax_row,boundary_flag,log_comparison
void write_kt_csv(std::ostream& os, const std::vector<KtRow>& rows);

}  // namespace cesaro

#endif
