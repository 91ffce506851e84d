#include "wsn/engine.hpp"

#include <algorithm>
#include <limits>

namespace wsn {

Network::Network(const Topology& topology, double initial_energy)
    : d_avg_(topology.average_distance()) {
  nodes_.reserve(topology.size());
  for (const auto& site : topology.sites()) {
    nodes_.push_back(Node{site.id, site.position, site.d_bs, initial_energy, initial_energy,
                          true, true});
  }
}

std::size_t Network::alive_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.alive; }));
}

double Network::total_residual_energy() const {
  double sum = 0.0;
  for (const auto& n : nodes_) sum += n.e_residual;
  return sum;
}

double Network::total_initial_energy() const {
  double sum = 0.0;
  for (const auto& n : nodes_) sum += n.e_init;
  return sum;
}

bool Network::spend(NodeId id, double cost, double& spent) {
  Node& node = nodes_.at(id);
  if (!node.alive) {
    spent = 0.0;
    return false;
  }
  if (cost > node.e_residual) {
    spent = node.e_residual;
    node.e_residual = 0.0;
    node.alive = false;
    return false;
  }
  spent = cost;
  node.e_residual -= cost;
  if (node.e_residual <= 0.0) {
    node.e_residual = 0.0;
    node.alive = false;
  }
  return true;
}

SetupResult run_setup_phase(Network& network, const ElectionParams& params, Round r, Rng& rng) {
  SetupResult setup;
  setup.cluster_heads =
      elect_cluster_heads(network.nodes(), params, r, network.average_distance(), rng);

  if (setup.cluster_heads.empty()) {
    for (const auto& node : network.nodes())
      if (node.alive) setup.direct_senders.push_back(node.id);
    return setup;
  }

  for (NodeId ch : setup.cluster_heads) setup.clusters[ch];
  for (const auto& node : network.nodes()) {
    if (!node.alive ||
        std::binary_search(setup.cluster_heads.begin(), setup.cluster_heads.end(), node.id))
      continue;
    NodeId best = setup.cluster_heads.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (NodeId ch : setup.cluster_heads) {
      double d = distance(node.position, network.node(ch).position);
      if (d < best_d) {
        best_d = d;
        best = ch;
      }
    }
    setup.clusters[best].push_back(node.id);
  }
  return setup;
}

RoundOutcome run_steady_state(Network& network, const SetupResult& setup,
                              const RadioParams& radio, Round r) {
  RoundOutcome out;
  out.round = r;
  out.cluster_heads = setup.cluster_heads;
  out.clusters = setup.clusters;
  out.direct_senders = setup.direct_senders;

  const double bits = radio.message_bits;
  double spent = 0.0;
  auto charge = [&](NodeId id, double cost) {
    const bool was_alive = network.node(id).alive;
    const bool ok = network.spend(id, cost, spent);
    out.energy_consumed += spent;
    if (was_alive && !network.node(id).alive) out.deaths.push_back(id);
    return ok;
  };

  std::vector<std::pair<NodeId, NodeId>> members;  // (member, head)
  for (const auto& [ch, ids] : setup.clusters)
    for (NodeId m : ids) members.emplace_back(m, ch);
  std::sort(members.begin(), members.end());

  std::map<NodeId, std::size_t> received;
  for (const auto& [member, ch] : members) {
    if (!network.node(member).alive) continue;
    const double d = distance(network.node(member).position, network.node(ch).position);
    if (charge(member, tx_energy(bits, d, radio))) ++received[ch];
  }

  for (NodeId ch : setup.cluster_heads) {
    if (!network.node(ch).alive) continue;
    const std::size_t count = received[ch];
    if (count > 0 && !charge(ch, static_cast<double>(count) * rx_energy(bits, radio))) continue;
    if (!charge(ch, aggregation_energy(bits, static_cast<double>(count + 1), radio))) continue;
    if (charge(ch, tx_energy(bits, network.node(ch).d_bs, radio))) ++out.packets_to_bs;
  }

  for (NodeId id : setup.direct_senders) {
    if (!network.node(id).alive) continue;
    if (charge(id, tx_energy(bits, network.node(id).d_bs, radio))) ++out.packets_to_bs;
  }

  std::sort(out.deaths.begin(), out.deaths.end());
  return out;
}

RoundOutcome run_round(Network& network, const ElectionParams& params, const RadioParams& radio,
                       Round r, Rng& rng) {
  advance_epoch(network.nodes(), r, params);
  SetupResult setup = run_setup_phase(network, params, r, rng);
  return run_steady_state(network, setup, radio, r);
}

}  // namespace wsn
