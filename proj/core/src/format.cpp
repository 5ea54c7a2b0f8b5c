#include "rindler_ferm/format.hpp"

#include <cstdio>

namespace rindler_ferm {

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buffer[40];
  const int written = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

}  // namespace rindler_ferm
