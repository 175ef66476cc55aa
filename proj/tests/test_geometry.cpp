#include <doctest.h>

#include <random>

#include "cubechaos/errors.hpp"
#include "cubechaos/geometry.hpp"
#include "cubechaos/verify.hpp"

using namespace cubechaos;

namespace {

Rational q(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Children of c: its 4^n one-digit extensions.
std::vector<Code> children(const Code& c) {
  std::vector<Code> out;
  std::vector<Digit> digits(c.digits().begin(), c.digits().end());
  digits.push_back(0);
  for (Digit d = 1; d <= alphabet_size(c.dimension()); ++d) {
    digits.back() = d;
    out.emplace_back(c.dimension(), digits);
  }
  return out;
}

// All points of the closed box whose axis coordinates are lower + i*w/8,
// i = 0..8, boundaries included.
std::vector<Point> grid(const SubCubeBox& box) {
  std::vector<Point> pts{Point{}};
  for (const auto& a : box.axes) {
    std::vector<Point> next;
    for (const auto& p : pts)
      for (int i = 0; i <= 8; ++i) {
        Point e = p;
        e.push_back(a.lower + (a.upper - a.lower) * Rational(i, 8));
        next.push_back(std::move(e));
      }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace

TEST_CASE("subcube_bounds examples") {
  SUBCASE("n=1, (2) is (1/4, 1/2]") {
    const auto box = subcube_bounds(Code(1, {2}));
    REQUIRE(box.axes.size() == 1);
    CHECK(box.axes[0].lower == q(1, 4));
    CHECK(box.axes[0].upper == q(1, 2));
    CHECK(box.axes[0].lower_open);
    CHECK_FALSE(box.axes[0].upper_open);
  }
  SUBCASE("n=1, (1,2) is (1/16, 1/8]") {
    const auto box = subcube_bounds(Code(1, {1, 2}));
    CHECK(box.axes[0].lower == q(1, 16));
    CHECK(box.axes[0].upper == q(1, 8));
    CHECK(box.axes[0].lower_open);
  }
  SUBCASE("n=2, empty code is the closed unit square") {
    const auto box = subcube_bounds(Code(2));
    REQUIRE(box.axes.size() == 2);
    for (const auto& a : box.axes) {
      CHECK(a.lower == 0);
      CHECK(a.upper == 1);
      CHECK_FALSE(a.lower_open);
      CHECK_FALSE(a.upper_open);
    }
  }
  SUBCASE("first-order parts on the line") {
    CHECK(subcube_bounds(Code(1, {1})).axes[0] ==
          AxisInterval{0, q(1, 4), false, false});
    CHECK(subcube_bounds(Code(1, {3})).axes[0] ==
          AxisInterval{q(1, 2), q(3, 4), true, false});
    CHECK(subcube_bounds(Code(1, {4})).axes[0] ==
          AxisInterval{q(3, 4), 1, true, false});
  }
}

TEST_CASE("diameter_squared examples and law") {
  CHECK(diameter_squared(Code(1, {1, 4})) == q(1, 256));
  CHECK(diameter_squared(Code(2, {5})) == q(2, 16));
  CHECK(diameter_squared(Code(3)) == 3);

  DigitSampler s(7);
  for (unsigned n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= 12; ++k) {
      const Code c = s.code(n, k);
      CHECK(diameter_squared(c) == diagonal_squared_law(n, k));
    }
}

TEST_CASE("subcube_distance_squared examples") {
  const Code f1(1, {1}), f2(1, {2}), f3(1, {3}), f4(1, {4});
  CHECK(subcube_distance_squared(f1, f3) == q(1, 16));
  CHECK(subcube_distance_squared(f1, f4) == q(1, 4));  // gap 1/2
  CHECK(subcube_distance_squared(f2, f4) == q(1, 16));
  CHECK(subcube_distance_squared(f1, f2) == 0);
  // Opposite corners of the square: gap 1/2 per axis. Value from the
  // box-gap oracle (tests/oracles/oracle.py).
  CHECK(subcube_distance_squared(Code(2, {1}), Code(2, {16})) == q(1, 2));
  CHECK(subcube_distance_squared(f3, f1) == q(1, 16));
  // mixed orders
  CHECK(subcube_distance_squared(Code(1, {1, 1}), Code(1, {2})) == q(9, 256));
  CHECK_THROWS_AS(subcube_distance_squared(Code(1, {1}), Code(2, {1})),
                  DomainError);
}

TEST_CASE("encode_point examples") {
  CHECK(encode_point({q(1, 3)}, 3) == Code(1, {2, 2, 2}));
  CHECK(encode_point({Rational(0)}, 2) == Code(1, {1, 1}));
  CHECK(encode_point({q(1, 4)}, 1) == Code(1, {1}));
  CHECK(encode_point({Rational(1)}, 3) == Code(1, {4, 4, 4}));
  CHECK(encode_point({q(1, 2), Rational(0)}, 1) == Code(2, {2}));
  CHECK(encode_point({Rational(1), Rational(1)}, 0) == Code(2));
}

TEST_CASE("encode_point errors") {
  CHECK_THROWS_AS(encode_point({q(5, 4)}, 2), DomainError);
  CHECK_THROWS_AS(encode_point({q(-1, 4)}, 2), DomainError);
  CHECK_THROWS_AS(encode_point({}, 2), DomainError);
  CHECK_THROWS_AS(encode_point({q(1, 3)}, kDefaultMaxOrder + 1), CapacityError);
  CHECK_NOTHROW(encode_point({q(1, 3)}, 1000, 1000));
}

TEST_CASE("decode_code examples") {
  CHECK(decode_code(Code(1, {3, 3})) == Point{q(10, 16)});
  CHECK(decode_code(Code(2, {1})) == Point{0, 0});
  CHECK(decode_code(Code(1, {2})) == Point{q(1, 4)});
  CHECK(decode_code(Code(2, {8})) == Point{q(3, 4), q(1, 4)});
  // Boundary case: the lower corner of (2) is the open end 1/4, which
  // belongs to F_1.
  CHECK(encode_point(decode_code(Code(1, {2})), 1) == Code(1, {1}));
}

TEST_CASE("encoded point lies in its own half-open box") {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      Point x;
      for (unsigned j = 0; j < n; ++j) {
        // Mix 4-adic grid points (boundaries) with generic denominators.
        const unsigned long den = trial % 2 ? 64 : 97 + rng() % 1000;
        Rational v(static_cast<unsigned long>(rng() % (den + 1)), den);
        v.canonicalize();
        x.push_back(v);
      }
      for (std::size_t k : {0, 1, 3, 7}) {
        const Code c = encode_point(x, k);
        REQUIRE(c.order() == k);
        CHECK(subcube_bounds(c).contains(x));
      }
    }
}

TEST_CASE("nesting: extensions stay inside their prefix") {
  DigitSampler s(3);
  for (unsigned n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const Code c = s.code(n, 9);
      for (std::size_t k = 0; k < c.order(); ++k)
        CHECK(subcube_bounds(c.prefix(k))
                  .contains_closed(subcube_bounds(c.prefix(k + 1))));
    }
}

TEST_CASE("partition: children tile the parent with disjoint half-open boxes") {
  DigitSampler s(5);
  for (unsigned n = 1; n <= 2; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      const Code parent = s.code(n, trial % 4);
      const SubCubeBox pbox = subcube_bounds(parent);
      const auto kids = children(parent);
      std::vector<SubCubeBox> boxes;
      Rational volume = 0;
      for (const auto& k : kids) {
        boxes.push_back(subcube_bounds(k));
        CHECK(pbox.contains_closed(boxes.back()));
        Rational v = 1;
        for (const auto& a : boxes.back().axes) v *= a.upper - a.lower;
        volume += v;
      }
      Rational pvol = 1;
      for (const auto& a : pbox.axes) pvol *= a.upper - a.lower;
      CHECK(volume == pvol);

      for (const Point& x : grid(pbox)) {
        int owners = 0;
        for (const auto& b : boxes) owners += b.contains(x) ? 1 : 0;
        CHECK(owners == (pbox.contains(x) ? 1 : 0));
      }
    }
}

TEST_CASE("round trip holds exactly when the decoded point is a member") {
  // decode(c) for a long c approximates a point; re-encoding at order k
  // recovers the prefix unless the point sits on an open lower face of the
  // prefix box, which happens iff the tail has axis digit 0 throughout on
  // an axis whose prefix lower bound is positive.
  DigitSampler s(17);
  int boundary_cases = 0;
  for (unsigned n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 300; ++trial) {
      const Code drawn = s.code(n, 10);
      std::vector<Digit> digits(drawn.digits().begin(), drawn.digits().end());
      // Force some all-first-digit tails so the boundary branch is hit.
      if (trial % 3 == 0)
        for (std::size_t p = 6; p < digits.size(); ++p) digits[p] = 1;
      const Code c(n, digits);
      const Point x = decode_code(c);
      for (std::size_t k = 1; k < c.order(); ++k) {
        const Code pre = c.prefix(k);
        const SubCubeBox box = subcube_bounds(pre);
        bool on_open_face = false;
        for (unsigned j = 0; j < n; ++j) {
          bool tail_zero = true;
          for (std::size_t p = k; p < c.order(); ++p)
            tail_zero = tail_zero && axis_digit(c[p], j) == 0;
          on_open_face = on_open_face || (tail_zero && box.axes[j].lower > 0);
        }
        CHECK(box.contains(x) == !on_open_face);
        CHECK((encode_point(x, k) == pre) == !on_open_face);
        boundary_cases += on_open_face ? 1 : 0;
      }
    }
  CHECK(boundary_cases > 0);
}
