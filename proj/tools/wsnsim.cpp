// Command-line driver: run | compare | sweep-c.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/harness.hpp"
#include "wsn/text.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string outdir = "out";
  std::map<std::string, std::optional<std::string>> overrides;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "key = value configuration file");
  cmd->add_option("--out", args.outdir, "output directory")->capture_default_str();
  for (auto key : wsn::kConfigKeys) {
    auto& slot = args.overrides[std::string(key)];
    cmd->add_option("--" + std::string(key), slot, "override " + std::string(key));
  }
}

wsn::SimConfig resolve(const CommonArgs& args) {
  wsn::SimConfig config;
  if (!args.config_path.empty()) config = wsn::load_config(args.config_path);
  for (const auto& [key, value] : args.overrides)
    if (value) wsn::apply_setting(config, key, *value);
  config.validate();
  return config;
}

std::vector<wsn::Protocol> parse_protocols(const std::string& list) {
  std::vector<wsn::Protocol> out;
  for (auto name : wsn::split(list, ',')) out.push_back(wsn::parse_protocol(wsn::trim(name)));
  return out;
}

std::vector<double> parse_c_values(const std::string& list) {
  std::vector<double> out;
  for (auto item : wsn::split(list, ',')) {
    auto v = wsn::parse_real(item);
    if (!v) throw wsn::ConfigError("c-values", "cannot parse '" + std::string(item) + "'");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based LEACH / E-LEACH / DE-LEACH lifetime simulator"};
  app.require_subcommand(1);

  CommonArgs run_args, cmp_args, sweep_args;
  std::size_t cmp_seeds = 20, sweep_seeds = 10;
  std::string protocols = "leach,deleach";
  std::string c_values = "1,2,3,4,5,6,7,8,9,10";

  auto* run = app.add_subcommand("run", "single simulation");
  add_common(run, run_args);

  auto* cmp = app.add_subcommand("compare", "protocols x seeds on shared deployments");
  add_common(cmp, cmp_args);
  cmp->add_option("--seeds", cmp_seeds, "number of seeds")->capture_default_str();
  cmp->add_option("--protocols", protocols, "comma-separated protocols")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep-c", "DE-LEACH over a list of c values");
  add_common(sweep, sweep_args);
  sweep->add_option("--seeds", sweep_seeds, "number of seeds")->capture_default_str();
  sweep->add_option("--c-values", c_values, "comma-separated c values")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) return wsn::cmd_run(resolve(run_args), run_args.outdir, std::cout);
    if (cmp->parsed())
      return wsn::cmd_compare(resolve(cmp_args), parse_protocols(protocols), cmp_seeds,
                              cmp_args.outdir, std::cout);
    if (sweep->parsed())
      return wsn::cmd_sweep_c(resolve(sweep_args), parse_c_values(c_values), sweep_seeds,
                              sweep_args.outdir, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
