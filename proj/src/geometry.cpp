#include "cubechaos/geometry.hpp"

#include <algorithm>

#include "cubechaos/errors.hpp"

namespace cubechaos {

namespace {

// Per-axis numerators of the lower corner over the common denominator 4^k.
std::vector<Integer> lower_numerators(const Code& c) {
  std::vector<Integer> num(c.dimension(), 0);
  for (Digit d : c.digits()) {
    for (unsigned j = 0; j < c.dimension(); ++j) {
      mpz_mul_2exp(num[j].get_mpz_t(), num[j].get_mpz_t(), 2);
      num[j] += axis_digit(d, j);
    }
  }
  return num;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

bool AxisInterval::contains(const Rational& x) const {
  const bool above = lower_open ? x > lower : x >= lower;
  const bool below = upper_open ? x < upper : x <= upper;
  return above && below;
}

bool SubCubeBox::contains(const Point& x) const {
  if (x.size() != axes.size()) return false;
  for (std::size_t j = 0; j < axes.size(); ++j)
    if (!axes[j].contains(x[j])) return false;
  return true;
}

bool SubCubeBox::contains_closed(const SubCubeBox& inner) const {
  if (inner.axes.size() != axes.size()) return false;
  for (std::size_t j = 0; j < axes.size(); ++j) {
    if (inner.axes[j].lower < axes[j].lower) return false;
    if (inner.axes[j].upper > axes[j].upper) return false;
  }
  return true;
}

Point SubCubeBox::lower_corner() const {
  Point p;
  p.reserve(axes.size());
  for (const auto& a : axes) p.push_back(a.lower);
  return p;
}

SubCubeBox subcube_bounds(const Code& c) {
  const Integer den = pow4(c.order());
  SubCubeBox box;
  box.axes.reserve(c.dimension());
  for (const Integer& num : lower_numerators(c)) {
    AxisInterval a;
    a.lower = make_rational(num, den);
    a.upper = make_rational(num + 1, den);
    a.lower_open = num != 0;
    a.upper_open = false;
    box.axes.push_back(std::move(a));
  }
  return box;
}

Rational diameter_squared(const Code& c) {
  Rational s = 0;
  for (const auto& a : subcube_bounds(c).axes) {
    Rational w = a.upper - a.lower;
    s += w * w;
  }
  return s;
}

Rational box_distance_squared(const SubCubeBox& a, const SubCubeBox& b) {
  if (a.dimension() != b.dimension())
    throw DomainError("box distance: dimension mismatch");
  Rational s = 0;
  for (std::size_t j = 0; j < a.axes.size(); ++j) {
    Rational gap = 0;
    gap = std::max(gap, Rational(a.axes[j].lower - b.axes[j].upper));
    gap = std::max(gap, Rational(b.axes[j].lower - a.axes[j].upper));
    s += gap * gap;
  }
  return s;
}

Rational subcube_distance_squared(const Code& a, const Code& b) {
  if (a.dimension() != b.dimension())
    throw DomainError("subcube distance: dimension mismatch (" +
                      std::to_string(a.dimension()) + " vs " +
                      std::to_string(b.dimension()) + ")");
  return box_distance_squared(subcube_bounds(a), subcube_bounds(b));
}

Code encode_point(const Point& x, std::size_t k, std::size_t max_order) {
  if (x.empty()) throw DomainError("encode_point: empty point");
  const auto n = static_cast<unsigned>(x.size());
  alphabet_size(n);
  if (k > max_order)
    throw CapacityError("order " + std::to_string(k) + " exceeds the cap " +
                            std::to_string(max_order),
                        k);
  for (const auto& xi : x)
    if (sgn(xi) < 0 || xi > 1)
      throw DomainError("coordinate " + xi.get_str() + " outside [0,1]");

  // Relative position inside the current part is rem[j] / x[j].den, in (0,1]
  // (or exactly 0 for a coordinate that is 0).
  std::vector<Integer> rem;
  rem.reserve(n);
  for (const auto& xi : x) rem.push_back(xi.get_num());

  std::vector<Digit> digits(k);
  AxisDigits q(n);
  Integer t;
  for (std::size_t p = 0; p < k; ++p) {
    for (unsigned j = 0; j < n; ++j) {
      const Integer& den = x[j].get_den();
      if (rem[j] == 0) {
        q[j] = 0;
        continue;
      }
      // q = ceil(4r/den) - 1 puts the upper end of each part inside it.
      t = 4 * rem[j] - 1;
      mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
      q[j] = static_cast<unsigned>(t.get_ui());
      rem[j] = 4 * rem[j] - q[j] * den;
    }
    digits[p] = axes_to_digit(q);
  }
  return Code(n, std::move(digits));
}

Point decode_code(const Code& c) {
  const Integer den = pow4(c.order());
  Point p;
  p.reserve(c.dimension());
  for (const Integer& num : lower_numerators(c))
    p.push_back(make_rational(num, den));
  return p;
}

}  // namespace cubechaos
