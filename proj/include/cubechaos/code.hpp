#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubechaos {

// One subdivision index, 1-based: 1 <= d <= 4^n.
using Digit = std::uint64_t;

// Per-axis quaternary digits (each 0..3) of one subdivision step.
using AxisDigits = std::vector<unsigned>;

// 4^16 = 2^32 still leaves headroom in a Digit for mixed-radix arithmetic.
inline constexpr unsigned kMaxDimension = 16;

// Default truncation depth for codes standing in for infinite indices.
inline constexpr std::size_t kDefaultMaxOrder = 256;

// 4^n, the number of first-order sub-cubes. Throws CapacityError past
// kMaxDimension and DomainError for n == 0.
Digit alphabet_size(unsigned n);

// Finite index i_1 i_2 ... i_k naming a nested sub-cube of [0,1]^n. The empty
// code (order 0) is the whole cube.
class Code {
 public:
  explicit Code(unsigned dimension, std::vector<Digit> digits = {});

  unsigned dimension() const noexcept { return dimension_; }
  std::size_t order() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  // First min(k, order) digits.
  Code prefix(std::size_t k) const;

  // Drops the first min(k, order) digits.
  Code drop(std::size_t k) const;

  bool starts_with(const Code& other) const noexcept;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  unsigned dimension_;
  std::vector<Digit> digits_;
};

// Mixed-radix split of d - 1: axis j receives floor((d-1)/4^j) mod 4.
AxisDigits digit_to_axes(Digit d, unsigned n);

// 1 + sum_j q_j 4^j; the dimension is q.size().
Digit axes_to_digit(std::span<const unsigned> q);

// Quaternary digit of d on one axis, without building the whole vector.
inline unsigned axis_digit(Digit d, unsigned axis) noexcept {
  return static_cast<unsigned>(((d - 1) >> (2 * axis)) & 3U);
}

// "2,3,1"; the empty code renders as "".
std::string to_string(const Code& c);

// Inverse of to_string. Whitespace around digits is tolerated.
Code parse_code(unsigned dimension, std::string_view text);

}  // namespace cubechaos
