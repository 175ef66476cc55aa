#include "cubechaos/report.hpp"

#include <json.hpp>

#include "cubechaos/errors.hpp"

namespace cubechaos {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(const Witness& w) {
  Json values = Json::object();
  for (const auto& [key, value] : w.values)
    values[key] = to_fraction_string(value);
  return Json{{"label", w.label}, {"codes", w.codes}, {"values", values}};
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.label = j.at("label").get<std::string>();
  w.codes = j.at("codes").get<std::vector<std::vector<Digit>>>();
  for (const auto& [key, value] : j.at("values").items())
    w.values.emplace_back(key, parse_fraction(value.get<std::string>()));
  return w;
}

}  // namespace

const std::string* VerificationReport::param(std::string_view key) const {
  for (const auto& [k, v] : params)
    if (k == key) return &v;
  return nullptr;
}

std::string render_report(const VerificationReport& report, int indent) {
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  Json j{{"property", report.property},
         {"dimension", report.dimension},
         {"params", params},
         {"pass", report.pass},
         {"witnesses", witnesses},
         {"counterexample",
          report.counterexample ? to_json(*report.counterexample) : Json()}};
  return j.dump(indent) + "\n";
}

VerificationReport parse_report(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    r.property = j.at("property").get<std::string>();
    r.dimension = j.at("dimension").get<unsigned>();
    for (const auto& [k, v] : j.at("params").items())
      r.params.emplace_back(k, v.get<std::string>());
    r.pass = j.at("pass").get<bool>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w));
    if (!j.at("counterexample").is_null())
      r.counterexample = witness_from_json(j.at("counterexample"));
    return r;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cubechaos
