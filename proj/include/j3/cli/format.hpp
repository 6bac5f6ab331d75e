#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "j3/cli/eval.hpp"

namespace j3::cli {

inline constexpr int kDefaultPrecision = 12;

/// %g with `precision` significant digits; negative zero prints as 0.
std::string format_real(double x, int precision = kDefaultPrecision);

/// "u + vj + wjj" with signs folded, e.g. "1 - 1j + 1jj".
std::string format_j3(const J3& x, int precision = kDefaultPrecision);

std::string format_text(const Value& v, int precision = kDefaultPrecision);

nlohmann::json to_json(const Value& v);
nlohmann::json to_json(const EvalResult& r);

/// Inverse of to_json for every value type. Throws std::invalid_argument on
/// malformed input.
Value value_from_json(const nlohmann::json& j);

nlohmann::json error_json(const std::string& code, const std::string& message,
                          std::optional<std::size_t> column = std::nullopt);

}  // namespace j3::cli
