#pragma once

#include <cstddef>

namespace wsn {

/// First-order radio dissipation coefficients. Defaults are the reference
/// deployment's values.
struct RadioParams {
  double e_elec = 5e-9;           // J/bit, transmitter/receiver electronics
  double eps_fs = 10e-12;         // J/bit/m^2, free-space amplifier
  double eps_mp = 0.0013e-12;     // J/bit/m^4, multipath amplifier
  double e_da = 5e-9;             // J/bit/message, aggregation
  double d0 = 70.0;               // m, branch point used by tx_energy
  double message_bits = 4000.0;   // L
  double initial_energy = 0.5;    // J, E_0

  /// Throws std::invalid_argument naming the first non-positive field.
  void validate() const;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

/// Energy to transmit `bits` over `d` meters: free-space (d^2) below d0,
/// multipath (d^4) at or above it.
double tx_energy(double bits, double d, const RadioParams& params);

double rx_energy(double bits, const RadioParams& params);

/// sqrt(eps_fs / eps_mp). Independent of params.d0.
double crossover_distance(const RadioParams& params);

double aggregation_energy(double bits, double message_count, const RadioParams& params);

// Analytic per-round costs of an idealised network with n nodes split into
// k equal clusters. Cluster size n/k is real-valued here.

/// Cluster-head cost per round: receive n/k - 1 messages, aggregate n/k,
/// uplink one over d_bs on the multipath model.
double ch_round_energy(double n, double k, double d_bs, const RadioParams& params);

/// Member cost per round: one free-space transmission to its cluster head.
double nch_round_energy(double d_ch, const RadioParams& params);

/// L (2n E_elec + n E_DA + k eps_mp d_bs^4 + n eps_fs E[d_ch^2]).
double total_network_energy(double n, double k, double d_bs, double d_ch_sq,
                            const RadioParams& params);

/// E[d_ch^2] = M^2 / (2 pi k) for a uniformly covered M x M field.
double expected_member_distance_sq(double region_side, double k);

/// Stationary point of total_network_energy in k using the expected
/// member distance above.
double optimal_cluster_count(double n, double region_side, double d_bs,
                             const RadioParams& params);

/// k_opt / n clamped to [0, 1].
double optimal_probability(double n, double k_opt);

}  // namespace wsn
