#pragma once

#include <cmath>

#include "symplectica/errors.hpp"

namespace symplectica::detail {

inline constexpr double kTanhLimit = 1.0 - 1e-12;

// chi from tanh(2 chi) = t
inline double half_atanh(double t) {
  if (!(std::abs(t) < kTanhLimit)) throw Error(ErrorKind::nonphysical, "boost parameter |tanh| >= 1");
  return 0.25 * std::log((1.0 + t) / (1.0 - t));
}

}  // namespace symplectica::detail
