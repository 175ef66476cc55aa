#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubechaos/code.hpp"
#include "cubechaos/rational.hpp"

namespace cubechaos {

struct Witness {
  std::string label;
  std::vector<std::vector<Digit>> codes;
  std::vector<std::pair<std::string, Rational>> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Outcome of one verification suite. A failing report always carries a
// counterexample.
struct VerificationReport {
  std::string property;
  unsigned dimension = 0;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::vector<Witness> witnesses;
  std::optional<Witness> counterexample;

  const std::string* param(std::string_view key) const;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

// JSON object {"property","dimension","params","pass","witnesses",
// "counterexample"}; rationals are "num/den" strings.
std::string render_report(const VerificationReport& report, int indent = 2);
VerificationReport parse_report(std::string_view json);

}  // namespace cubechaos
