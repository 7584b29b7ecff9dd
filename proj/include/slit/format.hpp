#pragma once

#include <string>

#include <json.hpp>

#include "slit/partition.hpp"
#include "slit/rational_function.hpp"
#include "slit/step_set.hpp"

namespace slit {

enum class OutputFormat { plain, latex, json };

OutputFormat parse_output_format(const std::string& s);  // throws ParseError

// Numerator/denominator scaled jointly so both have coprime integer
// coefficients and the denominator's lowest-degree nonzero coefficient is
// positive. This is the canonical printed form; it is unique, so printed
// output can be compared bit-exactly.
struct ClearedFraction {
  Polynomial num;
  Polynomial den;
};
ClearedFraction integer_cleared(const RationalFunction& f);

std::string format_polynomial(const Polynomial& p, OutputFormat fmt);
std::string format_rational_function(const RationalFunction& f, OutputFormat fmt);
nlohmann::json rational_function_to_json(const RationalFunction& f);

// "(3,1)" plain; with exponent grouping "(3^{2},1)" for repeated parts.
std::string format_partition(const Partition& p, OutputFormat fmt);
std::string format_skew_shape(const SkewShape& s, OutputFormat fmt);

nlohmann::json problem_to_json(const SlitProblem& prob);
// Accepts either a bare problem object or one nested under "problem".
SlitProblem problem_from_json(const nlohmann::json& j);  // throws ParseError, DomainError
SlitProblem load_problem_file(const std::string& path);

}  // namespace slit
