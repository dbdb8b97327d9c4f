#pragma once

#include "json.hpp"

#include <ostream>
#include <string>

namespace orbiquant::cli {

using Json = nlohmann::ordered_json;

/// Pretty JSON with 2-space indent; floats always with 17 significant digits
/// (nlohmann prints the shortest round-trip form instead).
void write_json(const Json& doc, std::ostream& out);

std::string format_double(double value);

/// CSV of doc[table] (an array of objects, nested objects flattened to
/// "a.b" columns, arrays written as compact JSON), or of doc itself as a
/// single row when table is empty. Header row, RFC 4180 quoting, CRLF-free.
void write_csv(const Json& doc, const std::string& table, std::ostream& out);

std::string csv_quote(const std::string& cell);

}  // namespace orbiquant::cli
