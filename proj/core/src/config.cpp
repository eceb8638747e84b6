#include "basilica/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "basilica/error.hpp"
#include "basilica/schreier.hpp"
#include "basilica/spectral.hpp"
#include "basilica/dynamics.hpp"
#include "basilica/wreath.hpp"

namespace basilica {

namespace {

const std::map<std::string, unsigned, std::less<>>& cap_limits() {
  static const std::map<std::string, unsigned, std::less<>> limits = {
      {"word_oracle", kMaxPermutationLevel},
      {"spectrum", spectral::kMaxDenseLevel},
      {"schreier", schreier::kMaxGraphLevel},
      {"embedding", dynamics::kMaxTreeLevel},
  };
  return limits;
}

template <class Map>
auto lookup(const Map& map, std::string_view name, const char* what) {
  auto it = map.find(name);
  if (it == map.end()) throw InputError(std::string("unknown ") + what + " '" + std::string(name) + "'");
  return it->second;
}

}  // namespace

RunConfig::RunConfig()
    : tolerances{{"spectral_match", 1e-6}, {"q_relative", 1e-8},   {"eigen_residual", 1e-8},
                 {"eigen_cluster", 1e-6},  {"root_bisection", 1e-12}, {"orbit", 1e-6},
                 {"nesting", 1e-6},        {"lift", 1e-9},          {"hausdorff_limit", 0.05}},
      level_caps{{"word_oracle", 14}, {"spectrum", 10}, {"schreier", 12}, {"embedding", 14}},
      sizes{{"root_grid", 1000000}, {"julia_points", 100000}} {}

double RunConfig::tol(std::string_view name) const { return lookup(tolerances, name, "tolerance"); }
unsigned RunConfig::cap(std::string_view name) const { return lookup(level_caps, name, "level cap"); }
std::uint64_t RunConfig::size(std::string_view name) const { return lookup(sizes, name, "size"); }

void RunConfig::validate() const {
  for (const auto& [name, value] : tolerances)
    if (!(value > 0)) throw InputError("tolerance '" + name + "' must be positive");
  for (const auto& [name, value] : level_caps) {
    const unsigned limit = lookup(cap_limits(), name, "level cap");
    if (value > limit)
      throw InputError("level cap '" + name + "' = " + std::to_string(value) +
                       " exceeds module limit " + std::to_string(limit));
  }
  for (const auto& [name, value] : sizes)
    if (value == 0) throw InputError("size '" + name + "' must be positive");
  if (format != "json" && format != "csv" && format != "dot")
    throw InputError("format must be json, csv or dot, got '" + format + "'");
  if (output_dir.empty()) throw InputError("output_dir must not be empty");
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  j["format"] = format;
  j["tolerances"] = tolerances;
  j["level_caps"] = level_caps;
  j["sizes"] = sizes;
  return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(std::string_view text) {
  RunConfig config;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw InputError("config: top level must be an object");
    for (const auto& [key, value] : j.items()) {
      if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "output_dir") {
        config.output_dir = value.get<std::string>();
      } else if (key == "format") {
        config.format = value.get<std::string>();
      } else if (key == "tolerances") {
        for (const auto& [name, v] : value.items()) {
          lookup(config.tolerances, name, "tolerance");
          config.tolerances[name] = v.get<double>();
        }
      } else if (key == "level_caps") {
        for (const auto& [name, v] : value.items()) {
          lookup(config.level_caps, name, "level cap");
          config.level_caps[name] = v.get<unsigned>();
        }
      } else if (key == "sizes") {
        for (const auto& [name, v] : value.items()) {
          lookup(config.sizes, name, "size");
          config.sizes[name] = v.get<std::uint64_t>();
        }
      } else {
        throw InputError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  config.validate();
  return config;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("config: cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return from_json(text.str());
}

void apply_environment(RunConfig& config) {
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
    config.output_dir = dir;
}

}  // namespace basilica
