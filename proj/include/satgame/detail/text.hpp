#pragma once

#include <cstdio>
#include <string>

namespace satgame::detail {

// Compact numeric formatting for diagnostics and CSV cells.
inline std::string num(double v, int precision = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace satgame::detail
