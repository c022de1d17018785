#pragma once

#include <string>

namespace summa {

/// Decimal rendering with 17 significant digits; lowercase scientific
/// notation when |x| < 1e-4 or |x| >= 1e16 (zero renders as "0").
/// Parsing the result with strtod recovers x exactly.
std::string format_number(double x);

}  // namespace summa
