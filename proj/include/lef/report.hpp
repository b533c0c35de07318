#pragma once

#include <string>

#include "lef/lefschetz.hpp"

namespace lef {

// Line-based structured encoding of a report: fixed key order, one value per
// line, absent optional fields written as "-". Scalars use their short form;
// the "char:" line carries the modulus. Reports serialize byte-identically
// across runs and round-trip through parse_report exactly.
std::string to_structured(const LefschetzReport& rep);

// Strict inverse of to_structured; InvalidParameter on any malformed line.
LefschetzReport parse_report(const std::string& text);

// Fixed-width human layout of the same data.
std::string render_table(const LefschetzReport& rep);

// Right-pads cells per column; every table the tool prints goes through
// this one formatter.
std::string format_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace lef
