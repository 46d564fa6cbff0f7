#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cli {

// 17 significant digits, enough to round-trip a double exactly. Output is
// locale-independent ('.' decimal point regardless of environment).
std::string fmt(double v);
std::string fmt_int(long long v);

// Joins cells with ',' and terminates with LF. Cells containing a comma,
// quote or newline are quoted per RFC 4180.
void write_row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace cli
