#pragma once

// JSON and flag-string conversions for the command-line front end.

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "scg/equilibrium.hpp"
#include "scg/weighted.hpp"

namespace scg::cli {

using Json = nlohmann::ordered_json;

/// Rational from a JSON integer, decimal or "p/q" string.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Json rationals_to_json(std::span<const Rational> rs);

/// {"kind": "linear", "slope": .., "intercept": ..} and friends, materialized
/// on 1..max_load. Tables must already cover max_load.
CostFunction cost_from_json(const Json& j, int max_load);
Json cost_to_json(const CostFunction& f);

/// "linear", "linear:2,1", "quadratic", "poly:0,0,1", "exp", "exp:3,1",
/// "table:1,2,4". Returns the JSON form.
Json parse_cost_spec(std::string_view spec);

/// Comma-separated integers, e.g. "5,3,2,2,1".
std::vector<int> parse_int_list(std::string_view text);

/// [[0,1],[2]] -> Partition; throws ValidationError with the report.
Partition partition_from_json(const Json& j, int n);
Json partition_to_json(const Partition& p);

Json loads_to_json(const LoadVector& lv);

/// Inline JSON when `text` starts with '{' or '[', otherwise a file path.
Json read_json_argument(const std::string& text);

}  // namespace scg::cli
