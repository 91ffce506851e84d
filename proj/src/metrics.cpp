#include "wsn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wsn/text.hpp"

namespace wsn {

void record_round(RunSummary& summary, const RoundOutcome& outcome, const Network& network) {
  const std::size_t previous = summary.total_packets();
  RoundRecord rec;
  rec.round = outcome.round;
  rec.alive = network.alive_count();
  rec.cluster_heads = outcome.cluster_heads.size();
  rec.packets_to_bs_cumulative = previous + outcome.packets_to_bs;
  rec.total_residual_energy = network.total_residual_energy();
  summary.records.push_back(rec);

  const std::size_t n = summary.node_count;
  if (!summary.fnd && rec.alive < n) summary.fnd = rec.round;
  if (!summary.hnd && rec.alive <= n / 2) summary.hnd = rec.round;
  if (!summary.lnd && rec.alive == 0) summary.lnd = rec.round;
}

Milestones scan_milestones(std::span<const RoundRecord> records, std::size_t node_count) {
  Milestones m;
  for (const auto& rec : records) {
    if (!m.fnd && rec.alive < node_count) m.fnd = rec.round;
    if (!m.hnd && rec.alive <= node_count / 2) m.hnd = rec.round;
    if (!m.lnd && rec.alive == 0) m.lnd = rec.round;
  }
  return m;
}

void write_csv(std::ostream& out, const RunSummary& summary) {
  out << kRoundCsvHeader << '\n';
  for (const auto& r : summary.records) {
    out << r.round << ',' << r.alive << ',' << r.cluster_heads << ','
        << r.packets_to_bs_cumulative << ',' << format_real(r.total_residual_energy) << '\n';
  }
}

std::string export_csv(const RunSummary& summary) {
  std::ostringstream out;
  write_csv(out, summary);
  return out.str();
}

std::vector<RoundRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kRoundCsvHeader)
    throw std::runtime_error("metrics csv: missing header");

  std::vector<RoundRecord> records;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto f = split(trim(line), ',');
    if (f.size() != 5) throw std::runtime_error("metrics csv: expected 5 fields");
    auto round = parse_unsigned(f[0]);
    auto alive = parse_unsigned(f[1]);
    auto chs = parse_unsigned(f[2]);
    auto pkts = parse_unsigned(f[3]);
    auto energy = parse_real(f[4]);
    if (!round || !alive || !chs || !pkts || !energy)
      throw std::runtime_error("metrics csv: malformed row '" + line + "'");
    records.push_back({*round, *alive, *chs, *pkts, *energy});
  }
  return records;
}

namespace {

MilestoneStats milestone_stats(std::span<const RunSummary> runs,
                               std::optional<Round> RunSummary::*field) {
  MilestoneStats s;
  std::vector<double> values;
  for (const auto& run : runs) {
    if (const auto& v = run.*field) values.push_back(static_cast<double>(*v));
    else ++s.absent;
  }
  s.present = values.size();
  if (values.empty()) {
    s.mean = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

}  // namespace

AggregateStats aggregate_runs(std::span<const RunSummary> summaries) {
  if (summaries.empty()) throw std::invalid_argument("aggregate_runs: no runs");
  for (const auto& s : summaries)
    if (s.protocol != summaries.front().protocol)
      throw std::invalid_argument("aggregate_runs: mixed protocols");

  AggregateStats agg;
  agg.protocol = summaries.front().protocol;
  agg.seed_count = summaries.size();
  agg.fnd = milestone_stats(summaries, &RunSummary::fnd);
  agg.hnd = milestone_stats(summaries, &RunSummary::hnd);
  agg.lnd = milestone_stats(summaries, &RunSummary::lnd);

  double packets = 0.0;
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (const auto& s : summaries) {
    packets += static_cast<double>(s.total_packets());
    shortest = std::min(shortest, s.records.size());
  }
  agg.packets_mean = packets / static_cast<double>(summaries.size());

  agg.residual_trajectory.assign(shortest, 0.0);
  for (const auto& s : summaries)
    for (std::size_t i = 0; i < shortest; ++i)
      agg.residual_trajectory[i] += s.records[i].total_residual_energy;
  for (double& e : agg.residual_trajectory) e /= static_cast<double>(summaries.size());
  return agg;
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateStats> rows) {
  auto real = [](double v) { return std::isnan(v) ? std::string() : format_real(v); };
  out << kAggregateCsvHeader << '\n';
  for (const auto& a : rows) {
    out << to_string(a.protocol) << ',' << a.seed_count << ',' << real(a.fnd.mean) << ','
        << real(a.fnd.std) << ',' << real(a.hnd.mean) << ',' << real(a.hnd.std) << ','
        << real(a.lnd.mean) << ',' << real(a.lnd.std) << ',' << real(a.packets_mean) << '\n';
  }
}

}  // namespace wsn
