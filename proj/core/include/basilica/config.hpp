#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace basilica {

// Settings shared by every subcommand. Serialises to and from JSON; unknown
// keys are rejected.
struct RunConfig {
  std::uint64_t seed = 42;
  std::string output_dir = "out";
  std::string format = "json";
  std::map<std::string, double, std::less<>> tolerances;
  std::map<std::string, unsigned, std::less<>> level_caps;
  std::map<std::string, std::uint64_t, std::less<>> sizes;  // sample counts, grid sizes

  RunConfig();

  double tol(std::string_view name) const;
  unsigned cap(std::string_view name) const;
  std::uint64_t size(std::string_view name) const;

  /// Throws InputError when a tolerance is not positive, a cap exceeds its
  /// module limit, or the format is unknown.
  void validate() const;

  std::string to_json() const;
  static RunConfig from_json(std::string_view text);
  static RunConfig load(const std::string& path);
};

inline constexpr const char* kOutputDirEnv = "BASILICA_OUT_DIR";

/// Replaces output_dir with the environment override when it is set.
void apply_environment(RunConfig& config);

}  // namespace basilica
