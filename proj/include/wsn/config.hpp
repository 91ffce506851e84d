#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wsn/election.hpp"
#include "wsn/radio.hpp"

namespace wsn {

struct SimConfig {
  std::size_t num_nodes = 100;
  double region_side = 100.0;
  double bs_offset = 75.0;
  Protocol protocol = Protocol::leach;
  Round max_rounds = 5000;
  std::uint64_t seed = 1;
  RadioParams radio;
  ElectionParams election;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

inline constexpr std::array<std::string_view, 17> kConfigKeys = {
    "num_nodes", "region_side", "bs_offset", "protocol", "max_rounds", "seed",
    "e_elec",    "eps_fs",      "eps_mp",    "e_da",     "d0",         "message_bits",
    "initial_energy", "p",      "p_opt1",    "p_opt2",   "c"};

/// Sets one key from its textual value. Unknown keys and unparsable values
/// throw ConfigError; range checks are left to validate().
void apply_setting(SimConfig& config, std::string_view key, std::string_view value);

/// Flat `key = value` lines; `#` starts a comment. Unset keys keep defaults.
/// The result is validated.
SimConfig parse_config(std::istream& in, SimConfig base = {});
SimConfig load_config(const std::filesystem::path& path, SimConfig base = {});

/// Every key, one per line, in a form parse_config reads back exactly.
std::string to_config_text(const SimConfig& config);

}  // namespace wsn
