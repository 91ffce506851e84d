#pragma once

#include <cstdint>
#include <functional>

#include "wsn/metrics.hpp"

namespace wsn {

/// Called after every round with the round's outcome and the post-round state.
using RoundObserver = std::function<void(const RoundOutcome&, const Network&)>;

/// Runs rounds from 0 until every node is dead or max_rounds rounds have
/// elapsed. `seed` seeds the election stream only; the topology is given.
RunSummary run_simulation(const Topology& topology, const ElectionParams& params,
                          const RadioParams& radio, std::uint64_t seed, Round max_rounds,
                          const RoundObserver& observer = {});

}  // namespace wsn
