#include "cubechaos/verify.hpp"

#include <algorithm>
#include <limits>

#include "cubechaos/errors.hpp"
#include "cubechaos/shift.hpp"

namespace cubechaos {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::vector<Digit> to_vector(const Code& c) {
  return {c.digits().begin(), c.digits().end()};
}

Code single(unsigned n, Digit d) { return Code(n, {d}); }

// (4^n)^q, or CapacityError when it exceeds budget.
std::size_t enumeration_size(unsigned n, std::size_t q, std::size_t budget) {
  const Digit m = alphabet_size(n);
  std::size_t total = 1;
  for (std::size_t j = 0; j < q; ++j) {
    if (__builtin_mul_overflow(total, static_cast<std::size_t>(m), &total) ||
        total > budget)
      throw CapacityError("enumerating all order-" + std::to_string(q) +
                          " codes in dimension " + std::to_string(n) +
                          " exceeds the budget of " + std::to_string(budget));
  }
  return total;
}

void fail(VerificationReport& r, Witness w) {
  if (r.counterexample) return;
  r.pass = false;
  r.counterexample = std::move(w);
}

}  // namespace

Digit DigitSampler::next(Digit alphabet) {
  if (alphabet == 0) throw DomainError("empty alphabet");
  // Reject the low residue class that would bias r % alphabet.
  const Digit threshold = (Digit{0} - alphabet) % alphabet;
  for (;;) {
    const Digit r = engine_();
    if (r >= threshold) return r % alphabet + 1;
  }
}

Code DigitSampler::code(unsigned n, std::size_t k) {
  const Digit m = alphabet_size(n);
  std::vector<Digit> digits(k);
  for (auto& d : digits) d = next(m);
  return Code(n, std::move(digits));
}

VerificationReport verify_diagonal(unsigned n, std::size_t k_max,
                                   const VerifyConfig& config) {
  alphabet_size(n);
  if (k_max < 1) throw DomainError("verify_diagonal needs k_max >= 1");
  if (k_max > config.max_order)
    throw CapacityError("k_max " + std::to_string(k_max) +
                            " exceeds the order cap " +
                            std::to_string(config.max_order),
                        k_max);
  VerificationReport r{"diagonal", n,
                       Params{{"k_max", std::to_string(k_max)},
                              {"samples", std::to_string(config.samples)},
                              {"seed", std::to_string(config.seed)}},
                       true, {}, std::nullopt};
  DigitSampler sampler(config.seed);
  std::optional<Rational> previous_min;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Rational expected = diagonal_squared_law(n, k);
    std::optional<Rational> lo, hi;
    Code first(n);
    for (std::size_t s = 0; s < config.samples; ++s) {
      Code c = sampler.code(n, k);
      const Rational got = config.diameter(c);
      if (s == 0) first = c;
      if (!lo || got < *lo) lo = got;
      if (!hi || got > *hi) hi = got;
      if (got != expected)
        fail(r, {"diameter mismatch", {to_vector(c)},
                 {{"expected", expected}, {"actual", got}}});
    }
    if (hi && previous_min && !(*hi < *previous_min))
      fail(r, {"diameter not decreasing", {to_vector(first)},
               {{"order", Rational(static_cast<unsigned long>(k))},
                {"max_at_order", *hi},
                {"min_at_previous_order", *previous_min}}});
    previous_min = lo;
    r.witnesses.push_back({"order " + std::to_string(k),
                           {to_vector(first)},
                           {{"diameter_squared", expected}}});
  }
  return r;
}

VerificationReport verify_separation(unsigned n, const VerifyConfig& config) {
  const Digit m = alphabet_size(n);
  if (n > config.max_separation_dimension)
    throw CapacityError("separation enumeration is capped at dimension " +
                        std::to_string(config.max_separation_dimension));
  const Rational bound = diagonal_squared_law(n, 1);
  VerificationReport r{"separation", n, {}, true, {}, std::nullopt};

  std::vector<Code> firsts;
  firsts.reserve(m);
  for (Digit d = 1; d <= m; ++d) firsts.push_back(single(n, d));

  std::size_t pairs = 0;
  std::optional<Rational> tight;
  for (Digit i = 1; i <= m; ++i) {
    std::optional<Digit> partner;
    Rational partner_dist = 0, best = 0;
    for (Digit j = 1; j <= m; ++j) {
      if (j == i) continue;
      ++pairs;
      const Rational d = config.distance(firsts[i - 1], firsts[j - 1]);
      best = std::max(best, d);
      if (!partner && d >= bound) {
        partner = j;
        partner_dist = d;
      }
    }
    if (!tight || best < *tight) tight = best;
    if (partner) {
      r.witnesses.push_back({"partner",
                             {{i}, {*partner}},
                             {{"distance_squared", partner_dist}}});
    } else {
      fail(r, {"no separated partner",
               {{i}},
               {{"max_distance_squared", best}, {"bound", bound}}});
    }
  }
  r.params = {{"bound", to_fraction_string(bound)},
              {"pairs", std::to_string(pairs)},
              {"tight_bound", to_fraction_string(tight.value_or(0))}};
  return r;
}

VerificationReport check_visitation(const Code& code, std::size_t q,
                                    const VerifyConfig& config) {
  if (q == 0) throw DomainError("visitation order must be >= 1");
  const unsigned n = code.dimension();
  const Digit m = alphabet_size(n);
  const std::size_t total = enumeration_size(n, q, config.enumeration_budget);
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first_visit(total, kUnseen);
  std::size_t visited = 0;
  for (std::size_t t = 0; t + q <= code.order(); ++t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < q; ++i) idx = idx * m + (code[t + i] - 1);
    if (first_visit[idx] == kUnseen) {
      first_visit[idx] = t;
      ++visited;
    }
  }
  VerificationReport r{"visitation", n,
                       Params{{"order", std::to_string(q)},
                              {"code_length", std::to_string(code.order())},
                              {"visited", std::to_string(visited)},
                              {"total", std::to_string(total)}},
                       true, {}, std::nullopt};
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Digit> block(q);
    std::size_t rest = idx;
    for (std::size_t i = q; i-- > 0;) {
      block[i] = rest % m + 1;
      rest /= m;
    }
    if (first_visit[idx] == kUnseen) {
      fail(r, {"unvisited sub-cube", {block}, {}});
      continue;
    }
    r.witnesses.push_back(
        {"visit",
         {std::move(block)},
         {{"first_visit",
           Rational(static_cast<unsigned long>(first_visit[idx]))}}});
  }
  return r;
}

VerificationReport verify_transitivity(unsigned n, std::size_t q,
                                       const VerifyConfig& config) {
  if (q == 0) throw DomainError("verify_transitivity needs q >= 1");
  enumeration_size(n, q, config.enumeration_budget);
  const Code code = dense_code(n, q, dense_code_length(n, q));
  VerificationReport r = check_visitation(code, q, config);
  r.property = "transitivity";
  return r;
}

VerificationReport verify_periodic_density(unsigned n, std::size_t p,
                                           const VerifyConfig& config) {
  alphabet_size(n);
  if (p < 1) throw DomainError("verify_periodic_density needs p >= 1");
  if (p > config.max_order)
    throw CapacityError("target order " + std::to_string(p) +
                            " exceeds the order cap " +
                            std::to_string(config.max_order),
                        p);
  const Rational eps_sq = diagonal_squared_law(n, p);
  VerificationReport r{"periodic", n,
                       Params{{"order", std::to_string(p)},
                              {"trials", std::to_string(config.trials)},
                              {"seed", std::to_string(config.seed)},
                              {"depth", std::to_string(config.max_order)},
                              {"epsilon_squared", to_fraction_string(eps_sq)}},
                       true, {}, std::nullopt};
  DigitSampler sampler(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const Code target = sampler.code(n, p);
    const Code approx = periodic_approximant(target, config.max_order);
    const SubCubeBox box = subcube_bounds(target);
    const bool inside = box.contains_closed(subcube_bounds(approx)) &&
                        box.contains(decode_code(approx));
    const Rational diam = config.diameter(target);
    if (!inside)
      fail(r, {"approximant outside target", {to_vector(target)}, {}});
    if (diam != eps_sq)
      fail(r, {"target diameter mismatch",
               {to_vector(target)},
               {{"expected", eps_sq}, {"actual", diam}}});
    r.witnesses.push_back(
        {"target", {to_vector(target)}, {{"diameter_squared", diam}}});
  }
  return r;
}

VerificationReport verify_liyorke(unsigned n, std::size_t segments,
                                  const VerifyConfig& config) {
  const Digit m = alphabet_size(n);
  if (segments < 1) throw DomainError("verify_liyorke needs >= 1 segment");
  const std::size_t len = segments * (segments + 1);
  if (segments > config.max_order || len > config.max_order)
    throw CapacityError("Li-Yorke schedule of " + std::to_string(segments) +
                            " segments needs " + std::to_string(len) +
                            " digits; cap is " +
                            std::to_string(config.max_order),
                        len);
  // Base cycles through the alphabet so every separated-digit choice occurs.
  std::vector<Digit> base(len);
  for (std::size_t i = 0; i < len; ++i) base[i] = i % m + 1;
  const ScrambledPair pair = liyorke_pair(Code(n, std::move(base)), segments);
  const Rational eps0_sq = diagonal_squared_law(n, 1);

  VerificationReport r{"liyorke", n, {}, true, {}, std::nullopt};
  std::optional<Rational> min_agree, max_disagree, min_disagree;
  const auto agree = agree_checkpoints(pair);
  const auto disagree = disagree_checkpoints(pair);
  for (std::size_t s = 0; s < pair.schedule.size(); ++s) {
    const std::size_t t = agree[s];
    const Code a = pair.a.drop(t), b = pair.b.drop(t);
    const Rational d = squared_distance(decode_code(a), decode_code(b));
    const Rational limit = diagonal_squared_law(n, pair.schedule[s].agree);
    if (!min_agree || d < *min_agree) min_agree = d;
    r.witnesses.push_back({"agree checkpoint",
                           {to_vector(a.prefix(pair.schedule[s].agree))},
                           {{"step", Rational(static_cast<unsigned long>(t))},
                            {"distance_squared", d},
                            {"limit", limit}}});
    if (d > limit)
      fail(r, {"agree checkpoint too far", {to_vector(a), to_vector(b)},
               {{"distance_squared", d}, {"limit", limit}}});
  }
  for (std::size_t s = 0; s < pair.schedule.size(); ++s) {
    const std::size_t start = disagree[s];
    for (std::size_t t = start; t < start + pair.schedule[s].disagree; ++t) {
      const Rational box_d =
          config.distance(single(n, pair.a[t]), single(n, pair.b[t]));
      if (!min_disagree || box_d < *min_disagree) min_disagree = box_d;
      if (box_d < eps0_sq)
        fail(r, {"disagree digits not separated",
                 {{pair.a[t]}, {pair.b[t]}},
                 {{"step", Rational(static_cast<unsigned long>(t))},
                  {"distance_squared", box_d},
                  {"bound", eps0_sq}}});
    }
    const Rational d = squared_distance(decode_code(pair.a.drop(start)),
                                        decode_code(pair.b.drop(start)));
    if (!max_disagree || d > *max_disagree) max_disagree = d;
    r.witnesses.push_back({"disagree checkpoint",
                           {{pair.a[start]}, {pair.b[start]}},
                           {{"step", Rational(static_cast<unsigned long>(start))},
                            {"distance_squared", d},
                            {"bound", eps0_sq}}});
    if (d < eps0_sq)
      fail(r, {"disagree checkpoint too close",
               {to_vector(pair.a.drop(start)), to_vector(pair.b.drop(start))},
               {{"distance_squared", d}, {"bound", eps0_sq}}});
  }
  r.params = {{"segments", std::to_string(segments)},
              {"length", std::to_string(len)},
              {"bound", to_fraction_string(eps0_sq)},
              {"min_agree_distance_squared", to_fraction_string(*min_agree)},
              {"min_disagree_box_distance_squared",
               to_fraction_string(*min_disagree)},
              {"max_disagree_distance_squared",
               to_fraction_string(*max_disagree)}};
  return r;
}

}  // namespace cubechaos
