#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "scg/errors.hpp"

namespace scg::cli {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected a number or rational string, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Json rationals_to_json(std::span<const Rational> rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_string(r));
  return out;
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<Rational> rational_array(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ValidationError(std::string(what) + " must be a non-empty array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

CostFunction cost_from_json(const Json& j, int max_load) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ValidationError("cost kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "linear") {
    const Rational slope = j.contains("slope") ? rational_from_json(j["slope"]) : Rational(1);
    const Rational intercept = j.contains("intercept") ? rational_from_json(j["intercept"]) : Rational(0);
    return CostFunction::linear(slope, intercept, max_load);
  }
  if (k == "poly") return CostFunction::polynomial(rational_array(field(j, "coeffs"), "coeffs"), max_load);
  if (k == "exp") {
    const Rational base = j.contains("base") ? rational_from_json(j["base"]) : Rational(2);
    const Rational scale = j.contains("scale") ? rational_from_json(j["scale"]) : Rational(1);
    return CostFunction::exponential(base, scale, max_load);
  }
  if (k == "table") {
    auto values = rational_array(field(j, "values"), "values");
    if (static_cast<int>(values.size()) < max_load)
      throw ValidationError("cost table has " + std::to_string(values.size()) + " entries, need " +
                            std::to_string(max_load));
    values.resize(max_load);
    return CostFunction::table(std::move(values));
  }
  throw ValidationError("unknown cost kind '" + k + "'");
}

Json cost_to_json(const CostFunction& f) {
  const auto& p = f.params();
  switch (f.kind()) {
    case CostKind::linear:
      return Json{{"kind", "linear"}, {"slope", to_string(p[0])}, {"intercept", to_string(p[1])}};
    case CostKind::polynomial:
      return Json{{"kind", "poly"}, {"coeffs", rationals_to_json(p)}};
    case CostKind::exponential:
      return Json{{"kind", "exp"}, {"base", to_string(p[0])}, {"scale", to_string(p[1])}};
    case CostKind::table:
      return Json{{"kind", "table"}, {"values", rationals_to_json(f.values())}};
  }
  return Json();
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Json rational_strings(std::string_view list) {
  Json out = Json::array();
  for (const auto& s : split(list, ',')) out.push_back(to_string(parse_rational(s)));
  return out;
}

}  // namespace

Json parse_cost_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
  const Json values = args.empty() ? Json::array() : rational_strings(args);
  auto arity = [&](std::size_t want) {
    if (values.size() != want)
      throw ValidationError("cost spec '" + std::string(spec) + "' needs " + std::to_string(want) + " parameters");
  };

  if (name == "linear" || name == "id") {
    if (values.empty()) return Json{{"kind", "linear"}, {"slope", "1"}, {"intercept", "0"}};
    arity(2);
    return Json{{"kind", "linear"}, {"slope", values[0]}, {"intercept", values[1]}};
  }
  if (name == "quadratic") {
    arity(0);
    return Json{{"kind", "poly"}, {"coeffs", Json{"0", "0", "1"}}};
  }
  if (name == "poly") {
    if (values.empty()) arity(1);
    return Json{{"kind", "poly"}, {"coeffs", values}};
  }
  if (name == "exp") {
    if (values.empty()) return Json{{"kind", "exp"}, {"base", "2"}, {"scale", "1"}};
    arity(2);
    return Json{{"kind", "exp"}, {"base", values[0]}, {"scale", values[1]}};
  }
  if (name == "table") {
    if (values.empty()) arity(1);
    return Json{{"kind", "table"}, {"values", values}};
  }
  throw ValidationError("unknown cost spec '" + std::string(spec) + "'");
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ValidationError("expected a comma-separated integer list, got '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

Partition partition_from_json(const Json& j, int n) {
  const Json& arr = j.is_object() ? field(j, "coalitions") : j;
  if (!arr.is_array()) throw ValidationError("partition must be an array of coalitions");
  std::vector<Coalition> cs;
  for (const auto& c : arr) {
    if (!c.is_array()) throw ValidationError("coalition must be an array of player indices");
    Coalition members;
    for (const auto& p : c) members.push_back(int_from_json(p, "player index"));
    cs.push_back(std::move(members));
  }
  const auto report = validate_partition(cs, n);
  if (!report.ok()) throw ValidationError("invalid partition: " + report.describe());
  return Partition(std::move(cs), n);
}

Json partition_to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& c : p.coalitions()) out.push_back(c);
  return out;
}

Json loads_to_json(const LoadVector& lv) { return lv.counts; }

Json read_json_argument(const std::string& text) {
  std::string body = text;
  if (text.empty() || (text.front() != '{' && text.front() != '[')) {
    std::ifstream in(text);
    if (!in) throw ValidationError("cannot read '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + text + "': " + e.what());
  }
}

}  // namespace scg::cli
