#pragma once

#include <string>

#include <json.hpp>

namespace landauer {

/// 17 significant digits ("%.17g"); non-finite values print as inf, -inf, nan.
std::string format_number(double value);

/// JSON number, or the strings "inf", "-inf", "nan" for non-finite values.
nlohmann::json json_number(double value);

}  // namespace landauer
