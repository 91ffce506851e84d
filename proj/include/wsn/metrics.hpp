#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsn/engine.hpp"

namespace wsn {

struct RoundRecord {
  Round round = 0;
  std::size_t alive = 0;
  std::size_t cluster_heads = 0;
  std::size_t packets_to_bs_cumulative = 0;
  double total_residual_energy = 0.0;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

/// Per-round series and lifetime milestones of one run. Milestones are the
/// first round after which alive < n (fnd), alive <= floor(n/2) (hnd) and
/// alive == 0 (lnd).
struct RunSummary {
  Protocol protocol = Protocol::leach;
  std::uint64_t seed = 0;
  std::size_t node_count = 0;
  std::optional<Round> fnd;
  std::optional<Round> hnd;
  std::optional<Round> lnd;
  std::vector<RoundRecord> records;

  std::size_t total_packets() const {
    return records.empty() ? 0 : records.back().packets_to_bs_cumulative;
  }

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

void record_round(RunSummary& summary, const RoundOutcome& outcome, const Network& network);

/// fnd/hnd/lnd recomputed from a record series by a single scan.
struct Milestones {
  std::optional<Round> fnd, hnd, lnd;
};
Milestones scan_milestones(std::span<const RoundRecord> records, std::size_t node_count);

inline constexpr const char* kRoundCsvHeader =
    "round,alive,cluster_heads,packets_to_bs_cum,total_residual_energy_j";

void write_csv(std::ostream& out, const RunSummary& summary);
std::string export_csv(const RunSummary& summary);
std::vector<RoundRecord> parse_csv(std::istream& in);

struct MilestoneStats {
  double mean = 0.0;  // NaN when no run reached the milestone
  double std = 0.0;   // sample standard deviation, 0 for a single value
  std::size_t present = 0;
  std::size_t absent = 0;
};

struct AggregateStats {
  Protocol protocol = Protocol::leach;
  std::size_t seed_count = 0;
  MilestoneStats fnd, hnd, lnd;
  double packets_mean = 0.0;
  /// Mean total residual energy per round, truncated to the shortest run.
  std::vector<double> residual_trajectory;
};

AggregateStats aggregate_runs(std::span<const RunSummary> summaries);

inline constexpr const char* kAggregateCsvHeader =
    "protocol,seed_count,fnd_mean,fnd_std,hnd_mean,hnd_std,lnd_mean,lnd_std,packets_mean";

void write_aggregate_csv(std::ostream& out, std::span<const AggregateStats> rows);

}  // namespace wsn
