#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "cubechaos/code.hpp"
#include "cubechaos/geometry.hpp"
#include "cubechaos/report.hpp"

namespace cubechaos {

// Seeded source of digits and codes. Built on mt19937_64 with rejection
// sampling so the stream is identical across standard libraries.
class DigitSampler {
 public:
  explicit DigitSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in 1..alphabet.
  Digit next(Digit alphabet);
  Code code(unsigned n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

struct VerifyConfig {
  std::uint64_t seed = 20190401;
  std::size_t samples = 100;  // diagonal: codes per order
  std::size_t trials = 100;   // periodic density
  unsigned max_separation_dimension = 4;
  std::size_t enumeration_budget = std::size_t{1} << 16;
  std::size_t max_order = kDefaultMaxOrder;

  // Routines under test; replaced by fixtures for fault injection.
  std::function<Rational(const Code&)> diameter = diameter_squared;
  std::function<Rational(const Code&, const Code&)> distance =
      subcube_distance_squared;
};

VerificationReport verify_diagonal(unsigned n, std::size_t k_max,
                                   const VerifyConfig& config = {});
VerificationReport verify_separation(unsigned n,
                                     const VerifyConfig& config = {});
VerificationReport verify_transitivity(unsigned n, std::size_t q,
                                       const VerifyConfig& config = {});
VerificationReport verify_periodic_density(unsigned n, std::size_t p,
                                           const VerifyConfig& config = {});
VerificationReport verify_liyorke(unsigned n, std::size_t segments,
                                  const VerifyConfig& config = {});

// Coverage of all order-q codes by the length-q windows of `code`. Shared by
// verify_transitivity; exposed so a corrupted orbit can be checked directly.
VerificationReport check_visitation(const Code& code, std::size_t q,
                                    const VerifyConfig& config = {});

}  // namespace cubechaos
