#include "landauer/format.hpp"

#include <cmath>
#include <cstdio>

namespace landauer {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json json_number(double value) {
  if (std::isfinite(value)) return value;
  return format_number(value);
}

}  // namespace landauer
