#pragma once

#include <map>
#include <span>
#include <vector>

#include "wsn/election.hpp"
#include "wsn/node.hpp"
#include "wsn/radio.hpp"
#include "wsn/topology.hpp"

namespace wsn {

/// Energy and role state of every node in one run. Owned by that run.
class Network {
 public:
  Network(const Topology& topology, double initial_energy);

  std::span<Node> nodes() { return nodes_; }
  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  double average_distance() const { return d_avg_; }

  std::size_t alive_count() const;
  double total_residual_energy() const;
  double total_initial_energy() const;

  /// Deducts `cost` from node `id`. A node that cannot cover the cost spends
  /// what it has, dies, and the call returns false. A node left at exactly
  /// zero also dies but the call succeeds. Returns energy actually spent
  /// through `spent`.
  bool spend(NodeId id, double cost, double& spent);

 private:
  std::vector<Node> nodes_;
  double d_avg_;
};

struct SetupResult {
  std::vector<NodeId> cluster_heads;
  std::map<NodeId, std::vector<NodeId>> clusters;  // CH -> members, both ascending
  std::vector<NodeId> direct_senders;
};

struct RoundOutcome {
  Round round = 0;
  std::vector<NodeId> cluster_heads;
  std::map<NodeId, std::vector<NodeId>> clusters;
  std::vector<NodeId> direct_senders;
  std::size_t packets_to_bs = 0;
  double energy_consumed = 0.0;
  std::vector<NodeId> deaths;

  friend bool operator==(const RoundOutcome&, const RoundOutcome&) = default;
};

/// Elects cluster heads and attaches each remaining alive node to its
/// nearest head (lowest id on ties). With no heads elected every alive
/// node sends straight to the base station. Control traffic is free.
SetupResult run_setup_phase(Network& network, const ElectionParams& params, Round r, Rng& rng);

/// Data phase. Members transmit (ascending id), then each head receives,
/// aggregates its own reading plus what arrived, and uplinks (ascending id),
/// then direct senders uplink (ascending id).
RoundOutcome run_steady_state(Network& network, const SetupResult& setup,
                              const RadioParams& radio, Round r);

RoundOutcome run_round(Network& network, const ElectionParams& params, const RadioParams& radio,
                       Round r, Rng& rng);

}  // namespace wsn
