#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qdensity/numeric.hpp"

namespace qdensity::cli {

/// Parses "0.5", "-0.25", "0.99i", "i", "1+0.02i", "1-.5i". Throws
/// std::invalid_argument on anything else.
numeric::Complex parse_complex(std::string_view text);

/// Fixed-point rendering with `digits` decimals, truncated toward zero.
std::string truncate_decimal(double value, int digits);

/// Exact decimal expansion of a non-negative rational, truncated to `digits`
/// decimals, trailing zeros dropped ("16/25" -> "0.64", "1" -> "1").
std::string rational_decimal(const subsets::Rational& value, int digits);

/// "re+imi" / "re-imi" with truncated components.
std::string format_complex(numeric::Complex z, int digits);

/// {"re": "...", "im": "..."} with decimal strings.
nlohmann::json complex_json(numeric::Complex z, int digits);

/// {"value": complex, "bound": number, "terms": integer, "precision_bits": integer}
nlohmann::json eval_result_json(const numeric::EvalResult& r, int digits);

/// True when `value` truncated to the number of decimals in `printed`
/// reproduces `printed` exactly (trailing "..." ignored).
bool matches_printed(double value, std::string_view printed);

} // namespace qdensity::cli
