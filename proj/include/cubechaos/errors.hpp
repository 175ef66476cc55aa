#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubechaos {

// Argument outside the domain of an operation (digit out of range, point
// outside the unit cube, dimension mismatch, shifting the whole cube).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction needs more digits (or more enumeration) than allowed.
// `required()` reports what would have been needed, 0 if unknown.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, std::size_t required = 0)
      : std::length_error(what), required_(required) {}

  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

}  // namespace cubechaos
