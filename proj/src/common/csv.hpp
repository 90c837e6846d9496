#pragma once

#include <string>
#include <vector>

namespace dca {

// Minimal RFC 4180 CSV support. Feature column names contain commas
// ("PM - Gratitude, mean"), so quoting is not optional here.
std::string csv_escape(const std::string& field);

std::string csv_row(const std::vector<std::string>& fields);

// Parses one logical document into rows of fields. Handles quoted fields
// with embedded commas, quotes and newlines.
std::vector<std::vector<std::string>> csv_parse(const std::string& content);

std::string format_double(double value);

} // namespace dca
