#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wsn/node.hpp"
#include "wsn/rng.hpp"

namespace wsn {

using Round = std::uint64_t;

enum class Protocol { leach, eleach, deleach };

std::string_view to_string(Protocol protocol);
/// Accepts "leach", "eleach"/"e-leach", "deleach"/"de-leach".
Protocol parse_protocol(std::string_view name);

struct ElectionParams {
  double p = 0.05;         // rotation base; sets the epoch length
  double p_opt1 = 0.0625;  // near-region share
  double p_opt2 = 0.03125; // far-region share
  double c = 6.0;          // near-region distance weight
  Protocol protocol = Protocol::leach;

  /// floor(1/p) rounds.
  Round epoch_length() const;
  void validate() const;

  friend bool operator==(const ElectionParams&, const ElectionParams&) = default;
};

double leach_threshold(const ElectionParams& params, Round r, bool in_g);

/// LEACH threshold while residual energy is above half of initial, scaled
/// by 2p * E_res / E_init below that.
double eleach_threshold(const ElectionParams& params, Round r, bool in_g, double e_residual,
                        double e_init);

/// Near region (d_i <= d_avg): p_opt1 rotation scaled by c * d_avg / d_i.
double deleach_near_threshold(const ElectionParams& params, Round r, bool in_g, double d_avg,
                              double d_i);

/// Far region (d_i > d_avg): p_opt2 rotation scaled by E_res / E_init.
double deleach_far_threshold(const ElectionParams& params, Round r, bool in_g,
                             double e_residual, double e_init);

enum class Region { near, far };

/// Near iff d_i <= d_avg.
Region region_of(double d_i, double d_avg);

/// Threshold for `node` under params.protocol; 0 for dead nodes.
double node_threshold(const Node& node, const ElectionParams& params, Round r, double d_avg);

/// Draws one variate per alive node in ascending id order and elects it
/// when the variate is below its threshold. Elected nodes leave G.
/// Returns elected ids in ascending order.
std::vector<NodeId> elect_cluster_heads(std::span<Node> nodes, const ElectionParams& params,
                                        Round r, double d_avg, Rng& rng);

/// At an epoch boundary every alive node rejoins G.
void advance_epoch(std::span<Node> nodes, Round r, const ElectionParams& params);

}  // namespace wsn
