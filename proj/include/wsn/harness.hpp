#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "wsn/config.hpp"
#include "wsn/simulation.hpp"

namespace wsn {

/// Deployment for experiment seed `seed`; shared by every protocol run on it.
Topology topology_for(const SimConfig& config, std::uint64_t seed);

/// Election stream seed. Each protocol draws from its own stream on a
/// shared deployment.
std::uint64_t election_seed(std::uint64_t seed, Protocol protocol);

/// config.seed, config.seed + 1, ...
std::vector<std::uint64_t> seed_list(const SimConfig& config, std::size_t count);

struct RunJob {
  SimConfig config;  // config.protocol selects the variant
  std::uint64_t seed = 0;
};

/// Observer for batched runs. Receives the job index; a given index is only
/// ever reported from one thread.
using JobObserver = std::function<void(std::size_t job, const RoundOutcome&, const Network&)>;

RunSummary simulate(const SimConfig& config, std::uint64_t seed,
                    const RoundObserver& observer = {});

/// Runs independent jobs on up to `threads` workers (0 = hardware count).
/// Results are in job order and do not depend on the thread count.
std::vector<RunSummary> run_jobs(std::span<const RunJob> jobs, unsigned threads = 0,
                                 const JobObserver& observer = {});

/// result[i][j] is protocols[i] on seed j.
std::vector<std::vector<RunSummary>> compare(const SimConfig& config,
                                             std::span<const Protocol> protocols,
                                             std::size_t seeds, const JobObserver& observer = {});

struct SweepRow {
  double c = 0.0;
  double fnd_mean = 0.0;
  double lnd_mean = 0.0;
  double packets_mean = 0.0;
};

std::vector<SweepRow> sweep_c(const SimConfig& config, std::span<const double> c_values,
                              std::size_t seeds, const JobObserver& observer = {});

/// Highest mean lnd; the lower c wins a tie.
double best_c(std::span<const SweepRow> rows);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// Writes `content` to a sibling temp file, then renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Command entry points. Each returns 0 and throws on failure.
int cmd_run(const SimConfig& config, const std::filesystem::path& outdir, std::ostream& out);
int cmd_compare(const SimConfig& config, std::span<const Protocol> protocols, std::size_t seeds,
                const std::filesystem::path& outdir, std::ostream& out);
int cmd_sweep_c(const SimConfig& config, std::span<const double> c_values, std::size_t seeds,
                const std::filesystem::path& outdir, std::ostream& out);

}  // namespace wsn
