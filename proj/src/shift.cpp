#include "cubechaos/shift.hpp"

#include <algorithm>

#include "cubechaos/errors.hpp"

namespace cubechaos {

Code shift(const Code& c) {
  if (c.empty())
    throw DomainError("shift of the order-0 code (the whole cube) is undefined");
  return c.drop(1);
}

Code shift(const Code& c, std::size_t times) {
  if (times > c.order())
    throw DomainError("cannot shift an order-" + std::to_string(c.order()) +
                      " code " + std::to_string(times) + " times");
  return c.drop(times);
}

OrbitRecord orbit(const Code& c, std::size_t steps) {
  if (steps > c.order())
    throw CapacityError("orbit of " + std::to_string(steps) +
                            " steps needs a code of order >= " +
                            std::to_string(steps) + "; at most " +
                            std::to_string(c.order()) + " steps are usable",
                        steps);
  OrbitRecord rec;
  rec.steps.reserve(steps + 1);
  Code cur = c;
  for (std::size_t t = 0;; ++t) {
    Point p = decode_code(cur);
    rec.steps.push_back({t, cur, std::move(p)});
    if (t == steps) break;
    cur = shift(cur);
  }
  return rec;
}

Code periodic_code(unsigned n, std::span<const Digit> block,
                   std::size_t repetitions) {
  if (block.empty()) throw DomainError("periodic block must be non-empty");
  std::vector<Digit> digits;
  digits.reserve(block.size() * repetitions);
  for (std::size_t r = 0; r < repetitions; ++r)
    digits.insert(digits.end(), block.begin(), block.end());
  Code(n, std::vector<Digit>(block.begin(), block.end()));  // validates block
  return Code(n, std::move(digits));
}

Code periodic_approximant(const Code& target, std::size_t depth) {
  if (target.empty())
    throw DomainError("periodic approximant needs a target of order >= 1");
  const std::size_t len = std::max(depth, target.order());
  std::vector<Digit> digits(len);
  for (std::size_t i = 0; i < len; ++i) digits[i] = target[i % target.order()];
  return Code(target.dimension(), std::move(digits));
}

std::size_t dense_code_length(unsigned n, std::size_t q) {
  const Digit m = alphabet_size(n);
  std::size_t total = 0;
  std::size_t blocks = 1;
  for (std::size_t j = 1; j <= q; ++j) {
    std::size_t term = 0;
    if (__builtin_mul_overflow(blocks, static_cast<std::size_t>(m), &blocks) ||
        __builtin_mul_overflow(blocks, j, &term) ||
        __builtin_add_overflow(total, term, &total))
      throw CapacityError("dense code length overflows for n=" +
                          std::to_string(n) + ", q=" + std::to_string(q));
  }
  return total;
}

Code dense_code(unsigned n, std::size_t q, std::size_t depth_limit) {
  if (q == 0) throw DomainError("dense code needs q >= 1");
  const std::size_t len = dense_code_length(n, q);
  if (len > depth_limit)
    throw CapacityError("dense code for n=" + std::to_string(n) +
                            ", q=" + std::to_string(q) + " needs " +
                            std::to_string(len) + " digits; limit is " +
                            std::to_string(depth_limit),
                        len);
  const Digit m = alphabet_size(n);
  std::vector<Digit> digits;
  digits.reserve(len);
  for (std::size_t j = 1; j <= q; ++j) {
    std::vector<Digit> block(j, 1);
    for (;;) {
      digits.insert(digits.end(), block.begin(), block.end());
      // odometer, last position fastest
      std::size_t pos = j;
      while (pos > 0 && block[pos - 1] == m) block[--pos] = 1;
      if (pos == 0) break;
      ++block[pos - 1];
    }
  }
  return Code(n, std::move(digits));
}

Digit separated_digit(Digit d, unsigned n) {
  AxisDigits q = digit_to_axes(d, n);
  // Per axis the gap to part b is max(0, |q - b| - 1)/4; it is maximized
  // uniquely by the far end of the axis, so the whole maximizer is unique.
  for (auto& qj : q) qj = qj <= 1 ? 3 : 0;
  return axes_to_digit(q);
}

SensitivityWitness sensitivity_witness(const Code& c, std::size_t k) {
  if (c.order() < k + 1)
    throw CapacityError("sensitivity witness with prefix " + std::to_string(k) +
                            " needs a code of order >= " +
                            std::to_string(k + 1),
                        k + 1);
  const unsigned n = c.dimension();
  const Rational bound = diagonal_squared_law(n, 1);
  std::vector<Digit> digits(c.digits().begin(), c.digits().end());
  digits[k] = separated_digit(c[k], n);
  Code perturbed(n, std::move(digits));
  if (subcube_distance_squared(Code(n, {c[k]}), Code(n, {perturbed[k]})) <
      bound)
    throw std::logic_error("no separated first-order digit for " +
                           std::to_string(c[k]));
  return {c,
          std::move(perturbed),
          k,
          k,
          bound,
          diameter_squared(c.prefix(k))};
}

ScrambledPair liyorke_pair(const Code& base, std::size_t segments) {
  if (segments == 0) throw DomainError("Li-Yorke pair needs >= 1 segment");
  const std::size_t len = segments * (segments + 1);
  if (base.order() < len)
    throw CapacityError("Li-Yorke pair with " + std::to_string(segments) +
                            " segments needs a base code of order >= " +
                            std::to_string(len),
                        len);
  const unsigned n = base.dimension();
  ScrambledPair pair{base.prefix(len), Code(n), {}};
  std::vector<Digit> b;
  b.reserve(len);
  for (std::size_t s = 1; s <= segments; ++s) {
    for (std::size_t i = 0; i < s; ++i) b.push_back(pair.a[b.size()]);
    for (std::size_t i = 0; i < s; ++i)
      b.push_back(separated_digit(pair.a[b.size()], n));
    pair.schedule.push_back({s, s});
  }
  pair.b = Code(n, std::move(b));
  return pair;
}

std::vector<std::size_t> agree_checkpoints(const ScrambledPair& pair) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for (const auto& seg : pair.schedule) {
    out.push_back(pos);
    pos += seg.agree + seg.disagree;
  }
  return out;
}

std::vector<std::size_t> disagree_checkpoints(const ScrambledPair& pair) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for (const auto& seg : pair.schedule) {
    out.push_back(pos + seg.agree);
    pos += seg.agree + seg.disagree;
  }
  return out;
}

RecurrenceStats recurrence_stats(const Code& c, std::size_t horizon,
                                 std::size_t closeness_order) {
  if (c.order() < horizon + closeness_order)
    throw CapacityError("recurrence statistics need a code of order >= " +
                            std::to_string(horizon + closeness_order),
                        horizon + closeness_order);
  const unsigned n = c.dimension();
  const Rational eps0_sq = diagonal_squared_law(n, 1);
  RecurrenceStats st{horizon, closeness_order, {}, {}};
  for (std::size_t t = 1; t <= horizon; ++t) {
    bool back = true;
    for (std::size_t i = 0; i < closeness_order && back; ++i)
      back = c[t + i] == c[i];
    if (back) st.return_times.push_back(t);
    if (t < c.order() &&
        subcube_distance_squared(Code(n, {c[0]}), Code(n, {c[t]})) >= eps0_sq)
      st.separation_times.push_back(t);
  }
  return st;
}

}  // namespace cubechaos
