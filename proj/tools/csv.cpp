#include "csv.hpp"

#include <cstdio>

namespace cli {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_int(long long v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld", v);
  return buf;
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os.put(',');
    first = false;
    if (c.find_first_of(",\"\n") == std::string::npos) {
      os << c;
    } else {
      os.put('"');
      for (char ch : c) {
        if (ch == '"') os.put('"');
        os.put(ch);
      }
      os.put('"');
    }
  }
  os.put('\n');
}

}  // namespace cli
