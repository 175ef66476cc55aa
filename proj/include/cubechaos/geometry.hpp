#pragma once

#include <cstddef>
#include <vector>

#include "cubechaos/code.hpp"
#include "cubechaos/rational.hpp"

namespace cubechaos {

// One axis of a sub-cube. An open end excludes its endpoint.
struct AxisInterval {
  Rational lower;
  Rational upper;
  bool lower_open = false;
  bool upper_open = false;

  bool contains(const Rational& x) const;

  friend bool operator==(const AxisInterval&, const AxisInterval&) = default;
};

// Axis-aligned box of a code with exact bounds. Per axis the lower end is
// closed iff it sits at 0; the upper end is always closed. In one dimension
// this gives the parts [0,1/4], (1/4,1/2], (1/2,3/4], (3/4,1].
struct SubCubeBox {
  std::vector<AxisInterval> axes;

  unsigned dimension() const noexcept {
    return static_cast<unsigned>(axes.size());
  }

  // Half-open membership, honoring the openness flags.
  bool contains(const Point& x) const;

  // Containment of closures.
  bool contains_closed(const SubCubeBox& inner) const;

  Point lower_corner() const;

  friend bool operator==(const SubCubeBox&, const SubCubeBox&) = default;
};

SubCubeBox subcube_bounds(const Code& c);

// Squared diameter, measured from the box: sum of squared axis widths.
Rational diameter_squared(const Code& c);

// Squared inf-distance between the closed boxes.
Rational box_distance_squared(const SubCubeBox& a, const SubCubeBox& b);
Rational subcube_distance_squared(const Code& a, const Code& b);

// The order-k code whose half-open box holds x. Throws DomainError for
// coordinates outside [0,1] and CapacityError when k > max_order.
Code encode_point(const Point& x, std::size_t k,
                  std::size_t max_order = kDefaultMaxOrder);

// Lower corner of the closed box. For long codes this approximates the point
// named by the infinite index; on the 4-adic grid encode_point(decode_code(c))
// can land in a neighbouring part because that corner is an open endpoint.
Point decode_code(const Code& c);

}  // namespace cubechaos
