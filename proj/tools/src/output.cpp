#include "orbiquant_cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace orbiquant::cli {

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

void write_value(const Json& v, std::ostream& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write_value(item, out, depth + 1);
      }
      out << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write_value(v[i], out, depth + 1);
      }
      out << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float: out << format_double(v.get<double>()); return;
    default: out << v.dump(); return;
  }
}

std::string compact(const Json& v) {
  switch (v.type()) {
    case Json::value_t::object: {
      std::string s = "{";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) s += ',';
        first = false;
        s += Json(key).dump() + ':' + compact(item);
      }
      return s + '}';
    }
    case Json::value_t::array: {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += compact(v[i]);
      }
      return s + ']';
    }
    case Json::value_t::number_float: return format_double(v.get<double>());
    default: return v.dump();
  }
}

std::string cell_text(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null: return "";
    case Json::value_t::string: return v.get<std::string>();
    case Json::value_t::number_float: return format_double(v.get<double>());
    case Json::value_t::array:
    case Json::value_t::object: return compact(v);
    default: return v.dump();
  }
}

using Row = std::vector<std::pair<std::string, std::string>>;

void flatten(const Json& v, const std::string& prefix, Row& row) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [key, item] : v.items()) flatten(item, prefix.empty() ? key : prefix + "." + key, row);
    return;
  }
  row.emplace_back(prefix, cell_text(v));
}

}  // namespace

void write_json(const Json& doc, std::ostream& out) {
  write_value(doc, out, 0);
  out << '\n';
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string s = "\"";
  for (char c : cell) {
    if (c == '"') s += '"';
    s += c;
  }
  return s + '"';
}

void write_csv(const Json& doc, const std::string& table, std::ostream& out) {
  std::vector<Row> rows;
  if (table.empty()) {
    Row row;
    flatten(doc, "", row);
    rows.push_back(std::move(row));
  } else {
    for (const auto& item : doc.at(table)) {
      Row row;
      flatten(item, item.is_object() ? "" : table, row);
      rows.push_back(std::move(row));
    }
  }
  // union of columns in first-seen order
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, _] : row)
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);

  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_quote(columns[i]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ',';
      for (const auto& [key, value] : row)
        if (key == columns[i]) {
          out << csv_quote(value);
          break;
        }
    }
    out << '\n';
  }
}

}  // namespace orbiquant::cli
