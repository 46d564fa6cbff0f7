#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace cli {

// Raised for unreadable files, malformed JSON, unknown keys and
// wrongly-typed values. The message names the offending key.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values read from a JSON config file. Only keys listed in kRealKeys plus
// n and m are accepted; anything else is an error, not a warning.
struct ConfigValues {
  std::map<std::string, double> reals;
  std::optional<int> n;
  std::optional<int> m;
};

ConfigValues load_config(const std::string& path);

}  // namespace cli
