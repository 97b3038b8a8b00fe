#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "inar/model.hpp"

namespace inar {

// Shortest text that parses back to the same double.
std::string format_double(double v);
double parse_double(const std::string& s);

// One integer per line with an optional "y" header.
void write_series_csv(std::ostream& os, const Series& y);
Series read_series_csv(std::istream& is);

nlohmann::json series_to_json(const Series& y);
Series series_from_json(const nlohmann::json& j);

// Sniffs the format: a leading '[' means JSON.
Series read_series(std::istream& is);

nlohmann::json report_to_json(const EstimateReport& r);

}  // namespace inar
