#include "wsn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wsn/text.hpp"

namespace wsn {

namespace fs = std::filesystem;

Topology topology_for(const SimConfig& config, std::uint64_t seed) {
  return generate_topology(config.num_nodes, config.region_side, config.bs_offset, seed);
}

std::uint64_t election_seed(std::uint64_t seed, Protocol protocol) {
  return derive_seed(seed, 1 + static_cast<std::uint64_t>(protocol));
}

std::vector<std::uint64_t> seed_list(const SimConfig& config, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = config.seed + i;
  return seeds;
}

RunSummary simulate(const SimConfig& config, std::uint64_t seed, const RoundObserver& observer) {
  config.validate();
  ElectionParams election = config.election;
  election.protocol = config.protocol;
  RunSummary summary = run_simulation(topology_for(config, seed), election, config.radio,
                                      election_seed(seed, config.protocol), config.max_rounds,
                                      observer);
  summary.seed = seed;
  return summary;
}

std::vector<RunSummary> run_jobs(std::span<const RunJob> jobs, unsigned threads,
                                 const JobObserver& observer) {
  std::vector<RunSummary> results(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(jobs.size(), 1));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        RoundObserver per_run;
        if (observer)
          per_run = [&observer, i](const RoundOutcome& o, const Network& n) { observer(i, o, n); };
        results[i] = simulate(jobs[i].config, jobs[i].seed, per_run);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::vector<std::vector<RunSummary>> compare(const SimConfig& config,
                                             std::span<const Protocol> protocols,
                                             std::size_t seeds, const JobObserver& observer) {
  if (seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  const auto seed_values = seed_list(config, seeds);
  std::vector<RunJob> jobs;
  for (Protocol protocol : protocols) {
    for (auto seed : seed_values) {
      SimConfig c = config;
      c.protocol = protocol;
      c.election.protocol = protocol;
      jobs.push_back({c, seed});
    }
  }
  auto flat = run_jobs(jobs, 0, observer);

  std::vector<std::vector<RunSummary>> grouped(protocols.size());
  for (std::size_t i = 0; i < protocols.size(); ++i)
    grouped[i].assign(std::make_move_iterator(flat.begin() + i * seeds),
                      std::make_move_iterator(flat.begin() + (i + 1) * seeds));
  return grouped;
}

std::vector<SweepRow> sweep_c(const SimConfig& config, std::span<const double> c_values,
                              std::size_t seeds, const JobObserver& observer) {
  if (c_values.empty()) throw std::invalid_argument("c_values must not be empty");
  if (seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  const auto seed_values = seed_list(config, seeds);
  std::vector<RunJob> jobs;
  for (double c : c_values) {
    for (auto seed : seed_values) {
      SimConfig cfg = config;
      cfg.protocol = Protocol::deleach;
      cfg.election.protocol = Protocol::deleach;
      cfg.election.c = c;
      jobs.push_back({cfg, seed});
    }
  }
  auto flat = run_jobs(jobs, 0, observer);

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < c_values.size(); ++i) {
    auto agg = aggregate_runs(std::span(flat).subspan(i * seeds, seeds));
    rows.push_back({c_values[i], agg.fnd.mean, agg.lnd.mean, agg.packets_mean});
  }
  return rows;
}

double best_c(std::span<const SweepRow> rows) {
  if (rows.empty()) throw std::invalid_argument("best_c: no rows");
  const SweepRow* best = nullptr;
  for (const auto& row : rows) {
    if (std::isnan(row.lnd_mean)) continue;
    if (!best || row.lnd_mean > best->lnd_mean ||
        (row.lnd_mean == best->lnd_mean && row.c < best->c))
      best = &row;
  }
  if (!best) {
    // No run reached lnd; fall back to the lowest c.
    return std::min_element(rows.begin(), rows.end(),
                            [](const SweepRow& a, const SweepRow& b) { return a.c < b.c; })
        ->c;
  }
  return best->c;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  auto real = [](double v) { return std::isnan(v) ? std::string() : format_real(v); };
  out << "c,fnd_mean,lnd_mean,packets_mean\n";
  for (const auto& r : rows)
    out << real(r.c) << ',' << real(r.fnd_mean) << ',' << real(r.lnd_mean) << ','
        << real(r.packets_mean) << '\n';
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot write '" + path.string() + "': " + ec.message());
}

namespace {

void prepare_outdir(const fs::path& outdir) {
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec || !fs::is_directory(outdir))
    throw std::runtime_error("cannot create output directory '" + outdir.string() + "'");
}

fs::path run_csv_path(const fs::path& outdir, const RunSummary& run) {
  return outdir / (std::string(to_string(run.protocol)) + "_" + std::to_string(run.seed) + ".csv");
}

std::string milestone(const std::optional<Round>& value) {
  return value ? std::to_string(*value) : std::string("none");
}

}  // namespace

int cmd_run(const SimConfig& config, const fs::path& outdir, std::ostream& out) {
  config.validate();
  prepare_outdir(outdir);
  RunSummary run = simulate(config, config.seed);
  write_file_atomic(run_csv_path(outdir, run), export_csv(run));
  out << "protocol=" << to_string(run.protocol) << '\n'
      << "seed=" << run.seed << '\n'
      << "fnd=" << milestone(run.fnd) << '\n'
      << "hnd=" << milestone(run.hnd) << '\n'
      << "lnd=" << milestone(run.lnd) << '\n'
      << "packets=" << run.total_packets() << '\n';
  return 0;
}

int cmd_compare(const SimConfig& config, std::span<const Protocol> protocols, std::size_t seeds,
                const fs::path& outdir, std::ostream& out) {
  config.validate();
  if (protocols.empty()) throw std::invalid_argument("no protocols given");
  prepare_outdir(outdir);
  auto grouped = compare(config, protocols, seeds);

  std::vector<AggregateStats> rows;
  for (const auto& runs : grouped) {
    for (const auto& run : runs) write_file_atomic(run_csv_path(outdir, run), export_csv(run));
    rows.push_back(aggregate_runs(runs));
  }
  std::ostringstream agg;
  write_aggregate_csv(agg, rows);
  write_file_atomic(outdir / "aggregate.csv", agg.str());
  out << agg.str();
  return 0;
}

int cmd_sweep_c(const SimConfig& config, std::span<const double> c_values, std::size_t seeds,
                const fs::path& outdir, std::ostream& out) {
  config.validate();
  for (double c : c_values)
    if (!(c > 0.0)) throw ConfigError("c", "sweep values must be positive");
  prepare_outdir(outdir);
  auto rows = sweep_c(config, c_values, seeds);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_file_atomic(outdir / "sweep_c.csv", csv.str());
  out << csv.str() << "best_c=" << format_real(best_c(rows)) << '\n';
  return 0;
}

}  // namespace wsn
