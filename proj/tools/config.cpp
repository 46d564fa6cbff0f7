#include "config.hpp"

#include <array>
#include <fstream>

#include <json.hpp>

namespace cli {

namespace {
constexpr std::array<const char*, 8> kRealKeys = {
    "M", "omega", "Omega", "alpha", "A", "B", "k", "phi"};
}

ConfigValues load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);

  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw config_error("malformed JSON in " + path + ": " + e.what());
  }
  if (!j.is_object())
    throw config_error("config root must be a JSON object: " + path);

  ConfigValues out;
  for (const auto& [key, value] : j.items()) {
    if (key == "n" || key == "m") {
      if (!value.is_number_integer())
        throw config_error("config key " + key + " must be an integer");
      const auto v = value.get<long long>();
      if (key == "n")
        out.n = static_cast<int>(v);
      else
        out.m = static_cast<int>(v);
      continue;
    }
    bool known = false;
    for (const char* rk : kRealKeys) known = known || key == rk;
    if (!known) throw config_error("unknown config key: " + key);
    if (!value.is_number())
      throw config_error("config key " + key + " must be a number");
    out.reals[key] = value.get<double>();
  }
  return out;
}

}  // namespace cli
