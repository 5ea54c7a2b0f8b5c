#pragma once

#include <string>

namespace rindler_ferm {

/// printf "%.17g": enough digits to round-trip any double, same bytes on every
/// conforming platform.
std::string format_real(double value);

}  // namespace rindler_ferm
