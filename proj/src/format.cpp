#include "summa/format.hpp"

#include <cmath>
#include <cstdio>

namespace summa {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const double mag = std::abs(x);
  if (mag < 1e-4 || mag >= 1e16) {
    std::snprintf(buf, sizeof buf, "%.16e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", x);
  }
  return buf;
}

}  // namespace summa
