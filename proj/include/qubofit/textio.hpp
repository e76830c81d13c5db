#pragma once

#include <cstdio>
#include <string>

namespace qubofit {

/// Shortest round-trip-exact decimal form of a double. All text formats in
/// this project use it so that files written from identical state are
/// byte-identical.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace qubofit
