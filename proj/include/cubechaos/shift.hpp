#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubechaos/code.hpp"
#include "cubechaos/geometry.hpp"
#include "cubechaos/rational.hpp"

namespace cubechaos {

// The generator: F_{i1 i2 ... ik} -> F_{i2 ... ik}. Throws DomainError on the
// empty code.
Code shift(const Code& c);

// shift applied `times` times. Throws DomainError if times > order.
Code shift(const Code& c, std::size_t times);

struct OrbitStep {
  std::size_t step;
  Code code;
  Point point;  // decode_code(code)
};

struct OrbitRecord {
  std::vector<OrbitStep> steps;
};

// steps + 1 records (t = 0..steps). Each step consumes one digit, so
// steps > order(c) throws CapacityError.
OrbitRecord orbit(const Code& c, std::size_t steps);

// block repeated `repetitions` times.
Code periodic_code(unsigned n, std::span<const Digit> block,
                   std::size_t repetitions);

// First max(depth, order) digits of target's endless repetition. The result
// lies in the box of target.
Code periodic_approximant(const Code& target,
                          std::size_t depth = kDefaultMaxOrder);

// sum_{j=1..q} j * (4^n)^j. Throws CapacityError on overflow.
std::size_t dense_code_length(unsigned n, std::size_t q);

// Every block of length 1, then every block of length 2, ... up to q, each
// length in lexicographic order. Throws CapacityError when the result would
// exceed depth_limit digits.
Code dense_code(unsigned n, std::size_t q, std::size_t depth_limit);

// The first-order digit farthest from d (smallest index on ties). Its squared
// distance from d is at least n/16.
Digit separated_digit(Digit d, unsigned n);

struct SensitivityWitness {
  Code original;
  Code perturbed;
  std::size_t agree_prefix;    // k
  std::size_t separation_step; // p
  Rational guaranteed_squared_separation;  // n/16
  Rational initial_diameter_squared;       // n/16^k, the shared box
};

// Copies c, replacing digit k+1 by separated_digit. Requires order(c) >= k+1.
SensitivityWitness sensitivity_witness(const Code& c, std::size_t k);

struct Segment {
  std::size_t agree;
  std::size_t disagree;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct ScrambledPair {
  Code a;
  Code b;
  std::vector<Segment> schedule;
};

// Segment s = 1..m agrees for s digits then disagrees for s digits, so the
// pair spans m(m+1) digits. Throws CapacityError if base is shorter.
ScrambledPair liyorke_pair(const Code& base, std::size_t segments);

// Start of the agree (resp. disagree) part of every segment.
std::vector<std::size_t> agree_checkpoints(const ScrambledPair& pair);
std::vector<std::size_t> disagree_checkpoints(const ScrambledPair& pair);

struct RecurrenceStats {
  std::size_t horizon;
  std::size_t closeness_order;
  // t in 1..horizon with shift^t(c) sharing its first closeness_order digits
  // with c.
  std::vector<std::size_t> return_times;
  // t in 1..horizon whose leading digit is >= sqrt(n)/4 away from c's.
  std::vector<std::size_t> separation_times;
};

// Finite-horizon recurrence report; requires order(c) >= horizon +
// closeness_order.
RecurrenceStats recurrence_stats(const Code& c, std::size_t horizon,
                                 std::size_t closeness_order);

}  // namespace cubechaos
