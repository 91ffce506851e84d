#include "wsn/election.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wsn {

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::leach: return "leach";
    case Protocol::eleach: return "eleach";
    case Protocol::deleach: return "deleach";
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  if (name == "leach") return Protocol::leach;
  if (name == "eleach" || name == "e-leach" || name == "e_leach") return Protocol::eleach;
  if (name == "deleach" || name == "de-leach" || name == "de_leach") return Protocol::deleach;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

Round ElectionParams::epoch_length() const {
  // The epsilon keeps 1/p for p = 1/m from flooring to m - 1.
  return static_cast<Round>(std::floor(1.0 / p + 1e-9));
}

void ElectionParams::validate() const {
  auto probability = [](double v, const char* name) {
    if (!(v > 0.0 && v < 1.0))
      throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
  };
  probability(p, "p");
  probability(p_opt1, "p_opt1");
  probability(p_opt2, "p_opt2");
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("c must be positive");
}

namespace {

// p_base / (1 - p (r mod floor(1/p)))
double rotation(const ElectionParams& params, double p_base, Round r) {
  const auto phase = static_cast<double>(r % params.epoch_length());
  return p_base / (1.0 - params.p * phase);
}

double clamp_unit(double t) { return std::clamp(t, 0.0, 1.0); }

void check_energy(double e_residual, double e_init) {
  if (!(e_init > 0.0)) throw std::invalid_argument("initial energy must be positive");
  if (e_residual < 0.0) throw std::invalid_argument("residual energy must be non-negative");
}

}  // namespace

double leach_threshold(const ElectionParams& params, Round r, bool in_g) {
  if (!in_g) return 0.0;
  return clamp_unit(rotation(params, params.p, r));
}

double eleach_threshold(const ElectionParams& params, Round r, bool in_g, double e_residual,
                        double e_init) {
  check_energy(e_residual, e_init);
  if (!in_g) return 0.0;
  const double base = rotation(params, params.p, r);
  if (e_residual > 0.5 * e_init) return clamp_unit(base);
  return clamp_unit(base * (2.0 * params.p * e_residual / e_init));
}

double deleach_near_threshold(const ElectionParams& params, Round r, bool in_g, double d_avg,
                              double d_i) {
  if (!(d_i > 0.0)) throw std::invalid_argument("near threshold: d_i must be positive");
  if (d_i > d_avg) throw std::logic_error("near threshold evaluated for a far-region node");
  if (!in_g) return 0.0;
  return clamp_unit(rotation(params, params.p_opt1, r) * (params.c * d_avg / d_i));
}

double deleach_far_threshold(const ElectionParams& params, Round r, bool in_g,
                             double e_residual, double e_init) {
  check_energy(e_residual, e_init);
  if (!in_g) return 0.0;
  return clamp_unit(rotation(params, params.p_opt2, r) * (e_residual / e_init));
}

Region region_of(double d_i, double d_avg) { return d_i <= d_avg ? Region::near : Region::far; }

double node_threshold(const Node& node, const ElectionParams& params, Round r, double d_avg) {
  if (!node.alive) return 0.0;
  switch (params.protocol) {
    case Protocol::leach:
      return leach_threshold(params, r, node.in_g);
    case Protocol::eleach:
      return eleach_threshold(params, r, node.in_g, node.e_residual, node.e_init);
    case Protocol::deleach:
      if (region_of(node.d_bs, d_avg) == Region::near)
        return deleach_near_threshold(params, r, node.in_g, d_avg, node.d_bs);
      return deleach_far_threshold(params, r, node.in_g, node.e_residual, node.e_init);
  }
  return 0.0;
}

std::vector<NodeId> elect_cluster_heads(std::span<Node> nodes, const ElectionParams& params,
                                        Round r, double d_avg, Rng& rng) {
  std::vector<NodeId> elected;
  for (auto& node : nodes) {
    if (!node.alive) continue;
    const double draw = rng.uniform();
    if (draw < node_threshold(node, params, r, d_avg)) {
      node.in_g = false;
      elected.push_back(node.id);
    }
  }
  return elected;
}

void advance_epoch(std::span<Node> nodes, Round r, const ElectionParams& params) {
  if (r % params.epoch_length() != 0) return;
  for (auto& node : nodes)
    if (node.alive) node.in_g = true;
}

}  // namespace wsn
