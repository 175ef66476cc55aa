#include "cubechaos/tent.hpp"

#include "cubechaos/errors.hpp"
#include "cubechaos/shift.hpp"

namespace cubechaos::tent {

namespace {

const Rational kQuarter(1, 4);
const Rational kHalf(1, 2);
const Rational kThreeQuarters(3, 4);

void require_unit(const Rational& x) {
  if (sgn(x) < 0 || x > 1)
    throw DomainError("tent map argument " + x.get_str() + " outside [0,1]");
}

}  // namespace

unsigned branch_of(const Rational& x) {
  require_unit(x);
  if (x <= kQuarter) return 1;
  if (x <= kHalf) return 2;
  if (x <= kThreeQuarters) return 3;
  return 4;
}

Rational eval(const Rational& x) {
  switch (branch_of(x)) {
    case 1:
      return 4 * x;
    case 2:
      return 4 * (kHalf - x);
    case 3:
      return 4 * (x - kHalf);
    default:
      return 4 * (1 - x);
  }
}

Rational inverse_branch(unsigned b, const Rational& y) {
  switch (b) {
    case 1:
      return y / 4;
    case 2:
      return kHalf - y / 4;
    case 3:
      return kHalf + y / 4;
    case 4:
      return 1 - y / 4;
    default:
      throw DomainError("tent branch " + std::to_string(b) + " outside 1..4");
  }
}

Code itinerary(const Rational& x, std::size_t k) {
  require_unit(x);
  std::vector<Digit> digits;
  digits.reserve(k);
  Rational cur = x;
  for (std::size_t p = 0; p < k; ++p) {
    digits.push_back(branch_of(cur));
    if (p + 1 < k) cur = eval(cur);
  }
  return Code(1, std::move(digits));
}

ClosedInterval code_interval(const Code& c) {
  if (c.dimension() != 1)
    throw DomainError("tent itineraries are one-dimensional");
  if (c.empty()) throw DomainError("code_interval needs order >= 1");
  const std::size_t k = c.order();
  const auto last = static_cast<unsigned>(c[k - 1]);
  ClosedInterval iv{Rational(last - 1, 4U), Rational(last, 4U)};
  iv.lower.canonicalize();
  iv.upper.canonicalize();
  for (std::size_t p = k - 1; p-- > 0;) {
    const auto b = static_cast<unsigned>(c[p]);
    Rational lo = inverse_branch(b, iv.lower);
    Rational hi = inverse_branch(b, iv.upper);
    // branches 2 and 4 reverse orientation
    if (lo > hi) std::swap(lo, hi);
    iv = {std::move(lo), std::move(hi)};
  }
  return iv;
}

bool check_semiconjugacy(const Rational& x, std::size_t k) {
  return itinerary(eval(x), k) == shift(itinerary(x, k + 1));
}

}  // namespace cubechaos::tent
