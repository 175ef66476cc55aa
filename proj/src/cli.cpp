#include "cubechaos/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubechaos/errors.hpp"
#include "cubechaos/geometry.hpp"
#include "cubechaos/tent.hpp"
#include "cubechaos/verify.hpp"

namespace cubechaos::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kCsvDecimals = 12;
// Hard ceiling on any code the CLI will build.
constexpr std::size_t kCliMaxDepth = std::size_t{1} << 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Point parse_point(const std::string& text, unsigned n) {
  Point x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    x.push_back(item.find('/') != std::string::npos ? parse_fraction(item)
                                                    : parse_decimal(item));
  if (x.size() != n)
    throw UsageError("--init has " + std::to_string(x.size()) +
                     " coordinates, --dim is " + std::to_string(n));
  return x;
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(to_fraction_string(v));
  return out;
}

Json code_json(const Code& c) {
  return Json{{"digits", std::vector<Digit>(c.digits().begin(), c.digits().end())},
              {"point", point_json(decode_code(c))}};
}

std::size_t checked_depth(std::size_t depth) {
  if (depth > kCliMaxDepth)
    throw CapacityError("depth " + std::to_string(depth) +
                            " exceeds the CLI limit " +
                            std::to_string(kCliMaxDepth),
                        depth);
  return depth;
}

// Common flags. Every subcommand accepts the shared grammar; unused values
// are ignored.
struct Options {
  unsigned dim = 1;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> steps;
  std::uint64_t seed = VerifyConfig{}.seed;
  std::optional<std::size_t> order;
  std::string out;
  std::string format;
  std::string init;
  std::string prefix;
  std::optional<std::size_t> k;
  std::string target;
  std::optional<std::size_t> segments;
  std::size_t trials = 100;
  unsigned max_dim = 4;
  std::string property;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--dim", o.dim, "cube dimension n")->check(CLI::PositiveNumber);
  sub->add_option("--depth", o.depth, "code truncation order");
  sub->add_option("--steps", o.steps, "number of shift steps");
  sub->add_option("--seed", o.seed, "seed for randomized suites");
  sub->add_option("--order", o.order, "block / sub-cube order");
  sub->add_option("--out", o.out, "output path (default: stdout)");
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::string run_orbit(const Options& o, bool& as_json) {
  if (o.init.empty()) throw UsageError("orbit requires --init");
  const std::size_t steps = o.steps.value_or(100);
  const std::size_t depth = checked_depth(o.depth.value_or(steps + 30));
  if (depth < steps)
    throw CapacityError("--depth " + std::to_string(depth) +
                            " is smaller than --steps " + std::to_string(steps),
                        steps);
  alphabet_size(o.dim);
  const Code c = encode_point(parse_point(o.init, o.dim), depth, depth);
  const OrbitRecord rec = orbit(c, steps);
  as_json = o.format == "json";
  return as_json ? render_orbit_json(rec) : render_orbit_csv(rec);
}

VerificationReport run_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.max_separation_dimension = o.max_dim;
  if (o.depth) cfg.max_order = checked_depth(*o.depth);
  const std::string& p = o.property;
  if (p == "diagonal") return verify_diagonal(o.dim, o.order.value_or(8), cfg);
  if (p == "separation") return verify_separation(o.dim, cfg);
  if (p == "transitivity")
    return verify_transitivity(o.dim, o.order.value_or(2), cfg);
  if (p == "periodic")
    return verify_periodic_density(o.dim, o.order.value_or(8), cfg);
  if (p == "liyorke") return verify_liyorke(o.dim, o.segments.value_or(10), cfg);
  throw UsageError("unknown property '" + p +
                   "' (expected diagonal, separation, transitivity, "
                   "periodic or liyorke)");
}

Json run_dense(const Options& o) {
  const std::size_t q = o.order.value_or(2);
  const Code c = dense_code(o.dim, q, checked_depth(o.depth.value_or(4096)));
  Json j{{"command", "dense"}, {"dimension", o.dim}, {"order", q},
         {"length", c.order()}};
  j["code"] = code_json(c);
  return j;
}

Json run_periodic(const Options& o) {
  if (o.target.empty()) throw UsageError("periodic requires --target");
  const Code target = parse_code(o.dim, o.target);
  const Code approx = periodic_approximant(
      target, checked_depth(o.depth.value_or(kDefaultMaxOrder)));
  const SubCubeBox box = subcube_bounds(target);
  const bool contained = box.contains_closed(subcube_bounds(approx)) &&
                         box.contains(decode_code(approx));
  Json j{{"command", "periodic"}, {"dimension", o.dim}};
  j["target"] = code_json(target);
  j["approximant"] = code_json(approx);
  j["period"] = target.order();
  j["containment"] = contained;
  j["diameter_squared"] = to_fraction_string(diameter_squared(target));
  return j;
}

// Prefix repeated periodically up to depth digits.
Code extend_prefix(const Options& o, std::size_t depth) {
  if (o.prefix.empty()) throw UsageError("missing --prefix");
  const Code prefix = parse_code(o.dim, o.prefix);
  if (prefix.empty()) throw UsageError("--prefix must be non-empty");
  return periodic_approximant(prefix, checked_depth(depth));
}

Json run_sensitivity(const Options& o) {
  const std::size_t k = o.k.value_or(0);
  const Code c = extend_prefix(o, o.depth.value_or(k + 16));
  const SensitivityWitness w = sensitivity_witness(c, k);
  const Rational actual = subcube_distance_squared(
      Code(o.dim, {w.original[k]}), Code(o.dim, {w.perturbed[k]}));
  Json j{{"command", "sensitivity"}, {"dimension", o.dim}};
  j["original"] = code_json(w.original);
  j["perturbed"] = code_json(w.perturbed);
  j["agree_prefix"] = w.agree_prefix;
  j["separation_step"] = w.separation_step;
  j["initial_diameter_squared"] = to_fraction_string(w.initial_diameter_squared);
  j["initial_distance_squared"] = to_fraction_string(
      squared_distance(decode_code(w.original), decode_code(w.perturbed)));
  j["separation"] = to_fraction_string(w.guaranteed_squared_separation);
  j["separation_achieved"] = to_fraction_string(actual);
  return j;
}

Json run_liyorke(const Options& o) {
  const std::size_t m = o.segments.value_or(3);
  const std::size_t len = m * (m + 1);
  Code base(o.dim);
  if (o.prefix.empty()) {
    const Digit alphabet = alphabet_size(o.dim);
    std::vector<Digit> digits(checked_depth(len));
    for (std::size_t i = 0; i < len; ++i) digits[i] = i % alphabet + 1;
    base = Code(o.dim, std::move(digits));
  } else {
    base = extend_prefix(o, std::max(len, o.depth.value_or(len)));
  }
  const ScrambledPair pair = liyorke_pair(base, m);
  Json schedule = Json::array();
  for (const auto& s : pair.schedule)
    schedule.push_back({{"agree", s.agree}, {"disagree", s.disagree}});
  Json j{{"command", "liyorke"}, {"dimension", o.dim}, {"segments", m}};
  j["a"] = code_json(pair.a);
  j["b"] = code_json(pair.b);
  j["schedule"] = schedule;
  j["agree_checkpoints"] = agree_checkpoints(pair);
  j["disagree_checkpoints"] = disagree_checkpoints(pair);
  return j;
}

std::string run_tent(const Options& o, bool& as_json) {
  if (o.init.empty()) throw UsageError("tent requires --init");
  const Point x = parse_point(o.init, 1);
  const std::size_t k = checked_depth(o.steps.value_or(10));
  const Code it = tent::itinerary(x[0], k);
  as_json = o.format == "json";
  if (!as_json) {
    std::string csv = "step,branch,x\n";
    Rational cur = x[0];
    for (std::size_t t = 0; t < k; ++t) {
      csv += std::to_string(t) + "," + std::to_string(it[t]) + "," +
             to_fraction_string(cur) + "\n";
      cur = tent::eval(cur);
    }
    return csv;
  }
  Json orbit_values = Json::array();
  Rational cur = x[0];
  for (std::size_t t = 0; t < k; ++t) {
    orbit_values.push_back(to_fraction_string(cur));
    cur = tent::eval(cur);
  }
  Json j{{"command", "tent"}, {"x", to_fraction_string(x[0])}, {"steps", k}};
  j["itinerary"] = std::vector<Digit>(it.digits().begin(), it.digits().end());
  j["orbit"] = orbit_values;
  if (k > 0) {
    const auto iv = tent::code_interval(it);
    j["interval"] = {to_fraction_string(iv.lower), to_fraction_string(iv.upper)};
    j["semiconjugacy"] = tent::check_semiconjugacy(x[0], k);
  }
  return j.dump(2) + "\n";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + o.out + "' for writing");
  f << text;
  if (!f) throw UsageError("failed writing '" + o.out + "'");
}

}  // namespace

std::string render_orbit_csv(const OrbitRecord& record) {
  std::string csv = "step";
  const std::size_t n = record.steps.empty() ? 0 : record.steps[0].point.size();
  for (std::size_t j = 1; j <= n; ++j) csv += ",x" + std::to_string(j);
  csv += '\n';
  for (const auto& s : record.steps) {
    csv += std::to_string(s.step);
    for (const auto& v : s.point) {
      csv += ',';
      csv += to_fixed_truncated(v, kCsvDecimals);
    }
    csv += '\n';
  }
  return csv;
}

std::string render_orbit_json(const OrbitRecord& record) {
  Json steps = Json::array();
  for (const auto& s : record.steps) {
    Json x = Json::array();
    for (const auto& v : s.point) x.push_back(to_fixed_truncated(v, kCsvDecimals));
    steps.push_back({{"step", s.step}, {"x", x}});
  }
  const std::size_t n = record.steps.empty() ? 0 : record.steps[0].point.size();
  Json j{{"command", "orbit"}, {"dimension", n}, {"steps", steps}};
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact symbolic dynamics of the chaos generating map on [0,1]^n",
               "cubechaos"};
  app.require_subcommand(1);

  auto* orbit_cmd = app.add_subcommand("orbit", "iterate the shift from a point; CSV or JSON");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite; JSON report");
  auto* dense_cmd = app.add_subcommand("dense", "export the dense-orbit code");
  auto* periodic_cmd = app.add_subcommand("periodic", "export a periodic approximant");
  auto* sens_cmd = app.add_subcommand("sensitivity", "export a sensitivity witness");
  auto* ly_cmd = app.add_subcommand("liyorke", "export a Li-Yorke scrambled pair");
  auto* tent_cmd = app.add_subcommand("tent", "tent-map itinerary of an exact point");
  for (auto* sub : {orbit_cmd, verify_cmd, dense_cmd, periodic_cmd, sens_cmd,
                    ly_cmd, tent_cmd}) {
    add_common(sub, o);
    sub->add_option("--init", o.init, "initial point, comma-separated decimals");
    sub->add_option("--prefix", o.prefix, "code prefix, e.g. 2,2");
    sub->add_option("--k", o.k, "agreeing prefix length");
    sub->add_option("--target", o.target, "target code, e.g. 5,9");
    sub->add_option("--segments", o.segments, "Li-Yorke segments");
  }
  verify_cmd->add_option("property", o.property,
                         "diagonal|separation|transitivity|periodic|liyorke")
      ->required();
  verify_cmd->add_option("--trials", o.trials, "periodic-density trials");
  verify_cmd->add_option("--max-dim", o.max_dim, "separation enumeration cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "cubechaos: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    bool as_json = true;
    if (orbit_cmd->parsed()) {
      emit(o, run_orbit(o, as_json), out);
    } else if (verify_cmd->parsed()) {
      const VerificationReport r = run_verify(o);
      emit(o, render_report(r), out);
      return r.pass ? kExitOk : kExitFailed;
    } else if (dense_cmd->parsed()) {
      emit(o, run_dense(o).dump(2) + "\n", out);
    } else if (periodic_cmd->parsed()) {
      emit(o, run_periodic(o).dump(2) + "\n", out);
    } else if (sens_cmd->parsed()) {
      emit(o, run_sensitivity(o).dump(2) + "\n", out);
    } else if (ly_cmd->parsed()) {
      emit(o, run_liyorke(o).dump(2) + "\n", out);
    } else if (tent_cmd->parsed()) {
      emit(o, run_tent(o, as_json), out);
    }
    return kExitOk;
  } catch (const CapacityError& e) {
    err << "cubechaos: capacity error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "cubechaos: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "cubechaos: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "cubechaos: internal error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace cubechaos::cli
