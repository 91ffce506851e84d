#include "wsn/simulation.hpp"

#include <stdexcept>

namespace wsn {

RunSummary run_simulation(const Topology& topology, const ElectionParams& params,
                          const RadioParams& radio, std::uint64_t seed, Round max_rounds,
                          const RoundObserver& observer) {
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");

  Network network(topology, radio.initial_energy);
  Rng rng(seed);
  RunSummary summary;
  summary.protocol = params.protocol;
  summary.seed = seed;
  summary.node_count = network.size();

  for (Round r = 0; r < max_rounds && network.alive_count() > 0; ++r) {
    RoundOutcome outcome = run_round(network, params, radio, r, rng);
    record_round(summary, outcome, network);
    if (observer) observer(outcome, network);
  }
  return summary;
}

}  // namespace wsn
