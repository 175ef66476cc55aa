#pragma once

#include <cstddef>

#include "cubechaos/code.hpp"
#include "cubechaos/rational.hpp"

namespace cubechaos::tent {

// Branch index 1..4 of x: [0,1/4], (1/4,1/2], (1/2,3/4], (3/4,1].
unsigned branch_of(const Rational& x);

// Double-humped tent map: 4x, 4(1/2-x), 4(x-1/2), 4(1-x) on the four parts.
Rational eval(const Rational& x);

// Inverse of branch b, mapping [0,1] onto the closure of part b.
Rational inverse_branch(unsigned b, const Rational& y);

// One-dimensional code whose p-th digit is the branch of the (p-1)-th iterate.
Code itinerary(const Rational& x, std::size_t k);

struct ClosedInterval {
  Rational lower;
  Rational upper;

  friend bool operator==(const ClosedInterval&,
                         const ClosedInterval&) = default;
};

// Closure of {x : itinerary(x, k) = c}, built backward through the inverse
// branches. Endpoint membership is deliberately not modelled.
ClosedInterval code_interval(const Code& c);

// itinerary(eval(x), k) == shift(itinerary(x, k + 1))
bool check_semiconjugacy(const Rational& x, std::size_t k);

}  // namespace cubechaos::tent
