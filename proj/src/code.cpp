#include "cubechaos/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cubechaos/errors.hpp"

namespace cubechaos {

Digit alphabet_size(unsigned n) {
  if (n == 0) throw DomainError("dimension must be at least 1");
  if (n > kMaxDimension)
    throw CapacityError("dimension " + std::to_string(n) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxDimension));
  return Digit{1} << (2 * n);
}

Code::Code(unsigned dimension, std::vector<Digit> digits)
    : dimension_(dimension), digits_(std::move(digits)) {
  const Digit m = alphabet_size(dimension_);
  for (std::size_t p = 0; p < digits_.size(); ++p) {
    if (digits_[p] < 1 || digits_[p] > m)
      throw DomainError("digit " + std::to_string(digits_[p]) +
                        " at position " + std::to_string(p + 1) +
                        " outside 1.." + std::to_string(m));
  }
}

Code Code::prefix(std::size_t k) const {
  k = std::min(k, digits_.size());
  Code c(*this);
  c.digits_.resize(k);
  return c;
}

Code Code::drop(std::size_t k) const {
  k = std::min(k, digits_.size());
  Code c(dimension_);
  c.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(k),
                   digits_.end());
  return c;
}

bool Code::starts_with(const Code& other) const noexcept {
  return other.dimension_ == dimension_ &&
         other.digits_.size() <= digits_.size() &&
         std::equal(other.digits_.begin(), other.digits_.end(),
                    digits_.begin());
}

AxisDigits digit_to_axes(Digit d, unsigned n) {
  const Digit m = alphabet_size(n);
  if (d < 1 || d > m)
    throw DomainError("digit " + std::to_string(d) + " outside 1.." +
                      std::to_string(m));
  AxisDigits q(n);
  for (unsigned j = 0; j < n; ++j) q[j] = axis_digit(d, j);
  return q;
}

Digit axes_to_digit(std::span<const unsigned> q) {
  alphabet_size(static_cast<unsigned>(q.size()));
  Digit r = 0;
  for (std::size_t j = q.size(); j-- > 0;) {
    if (q[j] > 3)
      throw DomainError("axis digit " + std::to_string(q[j]) + " outside 0..3");
    r = r * 4 + q[j];
  }
  return r + 1;
}

std::string to_string(const Code& c) {
  std::string out;
  for (std::size_t p = 0; p < c.order(); ++p) {
    if (p) out += ',';
    out += std::to_string(c[p]);
  }
  return out;
}

Code parse_code(unsigned dimension, std::string_view text) {
  std::vector<Digit> digits;
  auto is_space = [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
  };
  if (std::all_of(text.begin(), text.end(), is_space))
    return Code(dimension);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    Digit d = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw DomainError("malformed code '" + std::string(text) + "'");
    digits.push_back(d);
    start = end + 1;
  }
  return Code(dimension, std::move(digits));
}

}  // namespace cubechaos
