#include "wsn/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wsn/text.hpp"

namespace wsn {

namespace {

double real_value(std::string_view key, std::string_view value) {
  auto v = parse_real(value);
  if (!v || !std::isfinite(*v))
    throw ConfigError(std::string(key), "cannot parse '" + std::string(value) + "' as a number");
  return *v;
}

unsigned long long count_value(std::string_view key, std::string_view value) {
  auto v = parse_unsigned(value);
  if (!v)
    throw ConfigError(std::string(key),
                      "cannot parse '" + std::string(value) + "' as a non-negative integer");
  return *v;
}

void positive(double v, const char* key) {
  if (!(v > 0.0)) throw ConfigError(key, "must be positive");
}

void probability(double v, const char* key) {
  if (!(v > 0.0 && v < 1.0)) throw ConfigError(key, "must lie in (0, 1)");
}

}  // namespace

void SimConfig::validate() const {
  if (num_nodes < 1) throw ConfigError("num_nodes", "must be positive");
  positive(region_side, "region_side");
  if (!(bs_offset >= 0.0)) throw ConfigError("bs_offset", "must be non-negative");
  if (max_rounds < 1) throw ConfigError("max_rounds", "must be positive");
  positive(radio.e_elec, "e_elec");
  positive(radio.eps_fs, "eps_fs");
  positive(radio.eps_mp, "eps_mp");
  positive(radio.e_da, "e_da");
  positive(radio.d0, "d0");
  positive(radio.message_bits, "message_bits");
  positive(radio.initial_energy, "initial_energy");
  probability(election.p, "p");
  probability(election.p_opt1, "p_opt1");
  probability(election.p_opt2, "p_opt2");
  positive(election.c, "c");
}

void apply_setting(SimConfig& config, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "num_nodes") config.num_nodes = count_value(key, value);
  else if (key == "region_side") config.region_side = real_value(key, value);
  else if (key == "bs_offset") config.bs_offset = real_value(key, value);
  else if (key == "max_rounds") config.max_rounds = count_value(key, value);
  else if (key == "seed") config.seed = count_value(key, value);
  else if (key == "e_elec") config.radio.e_elec = real_value(key, value);
  else if (key == "eps_fs") config.radio.eps_fs = real_value(key, value);
  else if (key == "eps_mp") config.radio.eps_mp = real_value(key, value);
  else if (key == "e_da") config.radio.e_da = real_value(key, value);
  else if (key == "d0") config.radio.d0 = real_value(key, value);
  else if (key == "message_bits") config.radio.message_bits = real_value(key, value);
  else if (key == "initial_energy") config.radio.initial_energy = real_value(key, value);
  else if (key == "p") config.election.p = real_value(key, value);
  else if (key == "p_opt1") config.election.p_opt1 = real_value(key, value);
  else if (key == "p_opt2") config.election.p_opt2 = real_value(key, value);
  else if (key == "c") config.election.c = real_value(key, value);
  else if (key == "protocol") {
    try {
      config.protocol = parse_protocol(value);
    } catch (const std::invalid_argument&) {
      throw ConfigError("protocol", "unknown protocol '" + std::string(value) + "'");
    }
    config.election.protocol = config.protocol;
  } else {
    throw ConfigError(std::string(key), "unknown key");
  }
}

SimConfig parse_config(std::istream& in, SimConfig config) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(std::string(view), "line " + std::to_string(line_no) +
                                               " is not of the form key = value");
    apply_setting(config, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
  config.validate();
  return config;
}

SimConfig load_config(const std::filesystem::path& path, SimConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  return parse_config(in, std::move(base));
}

std::string to_config_text(const SimConfig& config) {
  std::ostringstream out;
  out << "num_nodes = " << config.num_nodes << '\n'
      << "region_side = " << format_real(config.region_side) << '\n'
      << "bs_offset = " << format_real(config.bs_offset) << '\n'
      << "protocol = " << to_string(config.protocol) << '\n'
      << "max_rounds = " << config.max_rounds << '\n'
      << "seed = " << config.seed << '\n'
      << "e_elec = " << format_real(config.radio.e_elec) << '\n'
      << "eps_fs = " << format_real(config.radio.eps_fs) << '\n'
      << "eps_mp = " << format_real(config.radio.eps_mp) << '\n'
      << "e_da = " << format_real(config.radio.e_da) << '\n'
      << "d0 = " << format_real(config.radio.d0) << '\n'
      << "message_bits = " << format_real(config.radio.message_bits) << '\n'
      << "initial_energy = " << format_real(config.radio.initial_energy) << '\n'
      << "p = " << format_real(config.election.p) << '\n'
      << "p_opt1 = " << format_real(config.election.p_opt1) << '\n'
      << "p_opt2 = " << format_real(config.election.p_opt2) << '\n'
      << "c = " << format_real(config.election.c) << '\n';
  return out.str();
}

}  // namespace wsn
