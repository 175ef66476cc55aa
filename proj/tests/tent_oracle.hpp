#pragma once

// Test-only oracle for tent-map code intervals. Works forward: it keeps the
// affine map g = phi^(p-1) restricted to the current interval and intersects
// with the preimage g^{-1}(closed part c_p). Shares nothing with the
// backward inverse-branch construction in the library.

#include <algorithm>
#include <utility>

#include "cubechaos/code.hpp"
#include "cubechaos/rational.hpp"

namespace oracle {

inline std::pair<cubechaos::Rational, cubechaos::Rational> forward_interval(
    const cubechaos::Code& c) {
  using cubechaos::Rational;
  Rational lo = 0, hi = 1;
  Rational slope = 1, offset = 0;
  // phi on part d is x -> a x + b
  const int a_of[5] = {0, 4, -4, 4, -4};
  const int b_of[5] = {0, 0, 2, -2, 4};
  for (std::size_t p = 0; p < c.order(); ++p) {
    const auto d = static_cast<int>(c[p]);
    Rational tlo(d - 1, 4), thi(d, 4);
    tlo.canonicalize();
    thi.canonicalize();
    Rational x1 = (tlo - offset) / slope;
    Rational x2 = (thi - offset) / slope;
    if (x1 > x2) std::swap(x1, x2);
    lo = std::max(lo, x1);
    hi = std::min(hi, x2);
    slope *= a_of[d];
    offset = offset * a_of[d] + b_of[d];
  }
  return {lo, hi};
}

}  // namespace oracle
