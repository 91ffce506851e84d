#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "wsn/engine.hpp"
#include "wsn/simulation.hpp"

using namespace wsn;

namespace {

const RadioParams kRadio{};

// Leaves only `ids` eligible; at r = 19 each is then elected with certainty.
void only_eligible(Network& net, std::initializer_list<NodeId> ids) {
  for (auto& n : net.nodes()) n.in_g = false;
  for (auto id : ids) net.nodes()[id].in_g = true;
}

}  // namespace

TEST_CASE("network starts fresh") {
  auto topo = generate_topology(10, 100, 75, 1);
  Network net(topo, 0.5);
  CHECK(net.alive_count() == 10);
  CHECK(net.total_initial_energy() == doctest::Approx(5.0));
  CHECK(net.total_residual_energy() == doctest::Approx(5.0));
  CHECK(net.average_distance() == topo.average_distance());
}

TEST_CASE("spend") {
  Topology topo({{0, 0}}, {0, 100}, 10);
  Network net(topo, 1.0);
  double spent = 0;
  CHECK(net.spend(0, 0.25, spent));
  CHECK(spent == 0.25);
  CHECK(net.node(0).e_residual == 0.75);
  CHECK_FALSE(net.spend(0, 2.0, spent));
  CHECK(spent == 0.75);
  CHECK(net.node(0).e_residual == 0.0);
  CHECK_FALSE(net.node(0).alive);
  CHECK_FALSE(net.spend(0, 0.1, spent));
  CHECK(spent == 0.0);
}

TEST_CASE("setup phase") {
  ElectionParams params;

  SUBCASE("no heads means everyone sends directly") {
    auto topo = generate_topology(10, 100, 75, 3);
    Network net(topo, 0.5);
    only_eligible(net, {});
    Rng rng(1);
    auto setup = run_setup_phase(net, params, 5, rng);
    CHECK(setup.cluster_heads.empty());
    CHECK(setup.clusters.empty());
    CHECK(setup.direct_senders.size() == 10);
  }

  SUBCASE("a single head gathers everyone") {
    auto topo = generate_topology(10, 100, 75, 3);
    Network net(topo, 0.5);
    net.nodes()[9].alive = false;
    net.nodes()[9].e_residual = 0;
    only_eligible(net, {4});
    Rng rng(1);
    auto setup = run_setup_phase(net, params, 19, rng);
    REQUIRE(setup.cluster_heads == std::vector<NodeId>{4});
    CHECK(setup.clusters.at(4) == std::vector<NodeId>{0, 1, 2, 3, 5, 6, 7, 8});
    CHECK(setup.direct_senders.empty());
  }

  SUBCASE("equidistant member joins the lower id") {
    std::vector<Position> pos(8, Position{90, 90});
    pos[3] = {0, 0};
    pos[7] = {10, 0};
    pos[5] = {5, 0};
    Topology topo(pos, {50, 175}, 100);
    Network net(topo, 0.5);
    only_eligible(net, {3, 7});
    Rng rng(2);
    auto setup = run_setup_phase(net, params, 19, rng);
    REQUIRE(setup.cluster_heads == std::vector<NodeId>{3, 7});
    const auto& low = setup.clusters.at(3);
    CHECK(std::find(low.begin(), low.end(), 5) != low.end());
  }
}

TEST_CASE("steady state") {
  // One node 100 m below the base station.
  SUBCASE("direct sender") {
    Topology topo({{50, 75}}, {50, 175}, 100);
    Network net(topo, 1.0);
    SetupResult setup;
    setup.direct_senders = {0};
    auto out = run_steady_state(net, setup, kRadio, 0);
    CHECK(out.energy_consumed == doctest::Approx(5.4e-4).epsilon(1e-12));
    CHECK(out.packets_to_bs == 1);
    CHECK(net.node(0).e_residual == doctest::Approx(1.0 - 5.4e-4).epsilon(1e-12));
  }

  SUBCASE("head without members") {
    Topology topo({{50, 75}}, {50, 175}, 100);
    Network net(topo, 1.0);
    SetupResult setup;
    setup.cluster_heads = {0};
    setup.clusters[0] = {};
    auto out = run_steady_state(net, setup, kRadio, 0);
    CHECK(out.energy_consumed == doctest::Approx(2.0e-5 + 5.4e-4).epsilon(1e-12));
    CHECK(out.packets_to_bs == 1);
  }

  SUBCASE("member with exactly its transmit cost") {
    // Member 1 sits 25 m from head 0.
    Topology topo({{50, 75}, {50, 50}}, {50, 175}, 100);
    Network net(topo, 1.0);
    const double member_cost = tx_energy(4000, 25, kRadio);
    net.nodes()[1].e_residual = member_cost;
    SetupResult setup;
    setup.cluster_heads = {0};
    setup.clusters[0] = {1};
    auto out = run_steady_state(net, setup, kRadio, 0);
    CHECK_FALSE(net.node(1).alive);
    CHECK(net.node(1).e_residual == 0.0);
    CHECK(out.deaths == std::vector<NodeId>{1});
    // Head paid for one received message and aggregated two.
    const double head_cost = rx_energy(4000, kRadio) + aggregation_energy(4000, 2, kRadio) +
                             tx_energy(4000, 100, kRadio);
    CHECK(net.node(0).e_residual == doctest::Approx(1.0 - head_cost).epsilon(1e-12));
    CHECK(out.packets_to_bs == 1);
  }

  SUBCASE("member that cannot afford its message") {
    Topology topo({{50, 75}, {50, 50}}, {50, 175}, 100);
    Network net(topo, 1.0);
    net.nodes()[1].e_residual = 1e-6;
    SetupResult setup;
    setup.cluster_heads = {0};
    setup.clusters[0] = {1};
    auto out = run_steady_state(net, setup, kRadio, 0);
    CHECK_FALSE(net.node(1).alive);
    const double head_cost = aggregation_energy(4000, 1, kRadio) + tx_energy(4000, 100, kRadio);
    CHECK(net.node(0).e_residual == doctest::Approx(1.0 - head_cost).epsilon(1e-12));
    CHECK(out.energy_consumed == doctest::Approx(1e-6 + head_cost).epsilon(1e-12));
  }

  SUBCASE("head dying before its uplink delivers nothing") {
    Topology topo({{50, 75}, {50, 50}}, {50, 175}, 100);
    Network net(topo, 1.0);
    net.nodes()[0].e_residual = 1e-4;  // covers rx and aggregation, not the uplink
    SetupResult setup;
    setup.cluster_heads = {0};
    setup.clusters[0] = {1};
    auto out = run_steady_state(net, setup, kRadio, 0);
    CHECK(out.packets_to_bs == 0);
    CHECK_FALSE(net.node(0).alive);
    CHECK(net.node(0).e_residual == 0.0);
    CHECK(out.deaths == std::vector<NodeId>{0});
  }
}

TEST_CASE("run_round") {
  ElectionParams params;

  SUBCASE("all dead") {
    auto topo = generate_topology(20, 100, 75, 1);
    Network net(topo, 0.5);
    for (auto& n : net.nodes()) {
      n.alive = false;
      n.e_residual = 0;
    }
    Rng rng(1);
    auto out = run_round(net, params, kRadio, 0, rng);
    CHECK(out.cluster_heads.empty());
    CHECK(out.direct_senders.empty());
    CHECK(out.packets_to_bs == 0);
    CHECK(out.energy_consumed == 0.0);
  }

  SUBCASE("energy accounting on a fresh network") {
    auto topo = generate_topology(100, 100, 75, 4);
    Network net(topo, 0.5);
    Rng rng(4);
    const double before = net.total_residual_energy();
    auto out = run_round(net, params, kRadio, 0, rng);
    REQUIRE(out.deaths.empty());

    // Re-derive every deduction from the roles alone.
    double expected = 0.0;
    for (const auto& [ch, members] : out.clusters) {
      for (auto m : members)
        expected += tx_energy(4000, distance(topo.sites()[m].position, topo.sites()[ch].position),
                              kRadio);
      expected += static_cast<double>(members.size()) * rx_energy(4000, kRadio) +
                  aggregation_energy(4000, static_cast<double>(members.size() + 1), kRadio) +
                  tx_energy(4000, topo.sites()[ch].d_bs, kRadio);
    }
    for (auto id : out.direct_senders) expected += tx_energy(4000, topo.sites()[id].d_bs, kRadio);

    CHECK(out.energy_consumed == doctest::Approx(expected).epsilon(1e-12));
    CHECK(before - net.total_residual_energy() == doctest::Approx(expected).epsilon(1e-9));
    CHECK(out.packets_to_bs == (out.cluster_heads.empty() ? 100 : out.cluster_heads.size()));
  }

  SUBCASE("replay") {
    auto topo = generate_topology(100, 100, 75, 6);
    Network a(topo, 0.5), b(topo, 0.5);
    Rng ra(6), rb(6);
    for (Round r = 0; r < 50; ++r) CHECK(run_round(a, params, kRadio, r, ra) == run_round(b, params, kRadio, r, rb));
  }
}

TEST_CASE("run_simulation preconditions") {
  auto topo = generate_topology(5, 100, 75, 1);
  CHECK_THROWS_AS(run_simulation(topo, {}, kRadio, 1, 0), std::invalid_argument);
}

TEST_CASE("single node that leads every round") {
  // p > 1/2 resets G every round and c = 20 saturates the near threshold,
  // so the node is its own cluster head until it runs dry.
  Topology topo({{30, 40}}, {50, 175}, 100);
  ElectionParams params;
  params.protocol = Protocol::deleach;
  params.p = 0.9;
  params.c = 20;
  const double d = topo.sites()[0].d_bs;
  REQUIRE(d >= kRadio.d0);
  const double per_round = ch_round_energy(1, 1, d, kRadio);
  const double rounds = std::floor(kRadio.initial_energy / per_round);
  const double remainder = kRadio.initial_energy - rounds * per_round;
  REQUIRE(remainder > 1e-6 * per_round);

  auto summary = run_simulation(topo, params, kRadio, 3, 100000);
  REQUIRE(summary.lnd.has_value());
  CHECK(*summary.lnd == static_cast<Round>(rounds));
  CHECK(summary.total_packets() == static_cast<std::size_t>(rounds));
  for (const auto& rec : summary.records) CHECK(rec.cluster_heads == 1);
}

TEST_CASE("run invariants across protocols") {
  for (auto protocol : {Protocol::leach, Protocol::eleach, Protocol::deleach}) {
    CAPTURE(to_string(protocol));
    auto topo = generate_topology(100, 100, 75, 12);
    ElectionParams params;
    params.protocol = protocol;

    double consumed = 0.0;
    std::size_t last_alive = topo.size();
    std::set<NodeId> dead;
    std::vector<Round> last_led(topo.size(), ~Round{0});
    bool conserved = true, partitioned = true, no_dead_roles = true, unique = true;
    bool non_negative = true, monotone = true;
    std::vector<bool> alive_before(topo.size(), true);

    auto observer = [&](const RoundOutcome& out, const Network& net) {
      consumed += out.energy_consumed;
      const double init = net.total_initial_energy();
      conserved &= std::abs(init - net.total_residual_energy() - consumed) <= 1e-9 * init;

      std::vector<int> roles(topo.size(), 0);
      for (auto id : out.cluster_heads) ++roles[id];
      for (const auto& [ch, members] : out.clusters)
        for (auto m : members) ++roles[m];
      for (auto id : out.direct_senders) ++roles[id];
      for (NodeId i = 0; i < topo.size(); ++i) {
        partitioned &= roles[i] == (alive_before[i] ? 1 : 0);
        no_dead_roles &= !(dead.count(i) && roles[i] > 0);
      }
      const Round epoch = params.epoch_length();
      for (auto id : out.cluster_heads) {
        if (last_led[id] != ~Round{0}) unique &= last_led[id] / epoch != out.round / epoch;
        last_led[id] = out.round;
      }
      for (const auto& n : net.nodes()) {
        non_negative &= n.e_residual >= 0.0;
        if (!n.alive) dead.insert(n.id);
        alive_before[n.id] = n.alive;
      }
      monotone &= net.alive_count() <= last_alive;
      last_alive = net.alive_count();
    };

    auto summary = run_simulation(topo, params, kRadio, 12, 20000, observer);
    CHECK(conserved);
    CHECK(partitioned);
    CHECK(no_dead_roles);
    CHECK(unique);
    CHECK(non_negative);
    CHECK(monotone);
    REQUIRE(summary.fnd.has_value());
    REQUIRE(summary.hnd.has_value());
    REQUIRE(summary.lnd.has_value());
    CHECK(*summary.fnd < *summary.hnd);
    CHECK(*summary.hnd < *summary.lnd);
    CHECK(summary.records.back().alive == 0);
  }
}

TEST_CASE("leach with reference settings finishes within the default horizon") {
  auto topo = generate_topology(100, 100, 75, 1);
  auto summary = run_simulation(topo, {}, kRadio, 1, 5000);
  REQUIRE(summary.lnd.has_value());
  CHECK(*summary.fnd < *summary.hnd);
  CHECK(*summary.hnd < *summary.lnd);
}
