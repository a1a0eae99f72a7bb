#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "scg/errors.hpp"

namespace scg::cli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw ValidationError("format must be json, csv or table");
}

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
    return s;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// The array of records that best summarizes a result; a one-row table of its
// scalar members otherwise.
Json primary_rows(const Json& report) {
  const Json& r = report["result"];
  const std::string cmd = report["command"].get<std::string>();
  const Json& input = report["input"];
  auto rows_at = [&](const char* key) -> Json { return r.contains(key) ? r[key] : Json::array(); };
  if (cmd == "analyze") return rows_at("support");
  if (cmd == "agreements") return rows_at("agreements");
  if (cmd == "verify") {
    const std::string scope = input.value("scope", std::string());
    if (scope == "prop2") return rows_at("regions");
    if (scope == "theorem1" || scope == "oracle") return rows_at("rows");
  }
  Json row = Json::object();
  for (const auto& [k, v] : r.items())
    if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                               return x.is_primitive();
                             })))
      row[k] = v;
  return Json::array({row});
}

std::vector<std::string> columns_of(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

std::string render_csv(const Json& report) {
  const Json rows = primary_rows(report);
  const auto cols = columns_of(rows);
  std::ostringstream out;
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_escape(cols[c]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      out << (c ? "," : "") << csv_escape(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
    out << '\n';
  }
  return out.str();
}

void scalar_lines(const Json& obj, const std::string& prefix, std::ostringstream& out) {
  for (const auto& [k, v] : obj.items()) {
    if (v.is_object()) {
      scalar_lines(v, prefix + k + ".", out);
    } else if (v.is_primitive() || std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
      out << prefix << k << ": " << cell(v) << '\n';
    }
  }
}

std::string render_table(const Json& report) {
  std::ostringstream out;
  out << report["command"].get<std::string>();
  if (report["input"].contains("scope")) out << ' ' << report["input"]["scope"].get<std::string>();
  out << " (exit " << report["status"].get<int>() << ")\n";
  scalar_lines(report["result"], "", out);

  const Json rows = primary_rows(report);
  if (rows.size() == 1 && rows[0] == Json::object()) return out.str();
  const auto cols = columns_of(rows);
  if (cols.empty()) return out.str();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  out << '\n';
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
  return out.str();
}

}  // namespace

std::string render(const Json& report, Format format) {
  switch (format) {
    case Format::json: return report.dump(2) + "\n";
    case Format::csv: return render_csv(report);
    case Format::table: return render_table(report);
  }
  return {};
}

}  // namespace scg::cli
