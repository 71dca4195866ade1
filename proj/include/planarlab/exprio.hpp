#pragma once

#include <string>

#include <json.hpp>

#include "planarlab/polyalg.hpp"

namespace planarlab {

inline constexpr const char* kReportVersion = "0.1.0";

// Grammar: integer and "p/q" rational literals, variables, +, -, *, ^ with
// non-negative integer exponents, parentheses.  Multiplication is always
// explicit.  Whitespace-insensitive.  Throws ParseError.
Poly2 parse_poly2(const std::string& text);
Poly4 parse_poly4(const std::string& text);

// Parses both components over {x, y}; parse errors are re-thrown with the
// offending component named in the message.
VectorField2 parse_field(const std::string& p_src, const std::string& q_src);

// Canonical text form: terms in degree-descending, x-major order, so that
// parse(format(p)) == p for every polynomial.
std::string format_poly(const Poly2& p);
std::string format_poly(const Poly4& p);
std::string format_field(const VectorField2& f);  // "(P, Q)"

// 17 significant digits, enough for exact double round trip.
std::string format_double17(double v);

// Single-object report emitted by every CLI subcommand.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json result);

}  // namespace planarlab
