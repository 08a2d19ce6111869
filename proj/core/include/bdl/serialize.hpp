#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bdl/bounds.hpp"
#include "bdl/laurent.hpp"
#include "bdl/representations.hpp"

namespace bdl {

using ordered_json = nlohmann::ordered_json;

/// Real rounded to 10 significant digits.
double round10(double x);

/// [{"exponents": [...], "coeff": "<decimal>"}, ...] in lexicographic
/// exponent order.
ordered_json to_json(const LaurentPoly& f);
/// Row-major nested array of polynomials.
ordered_json to_json(const LaurentMatrix& m);
ordered_json to_json(const RepMatrixBundle& rep, int k);

/// One row per nonzero term: "row,col,exponents,coeff" with exponents
/// joined by ';'.
std::string to_csv(const LaurentMatrix& m);

inline constexpr const char* kGrowthCsvHeader = "k,trace_of_norms,norm_of_collected_trace,root_estimate,ratio_estimate";

/// Growth sequence of zeta1 trace data, one row per k.
std::string growth_csv(const std::vector<Zeta1Sample>& samples);

}  // namespace bdl
