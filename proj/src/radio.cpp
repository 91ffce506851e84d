#include "wsn/radio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wsn {

void RadioParams::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(name) + " must be positive");
  };
  check(e_elec, "e_elec");
  check(eps_fs, "eps_fs");
  check(eps_mp, "eps_mp");
  check(e_da, "e_da");
  check(d0, "d0");
  check(message_bits, "message_bits");
  check(initial_energy, "initial_energy");
}

double tx_energy(double bits, double d, const RadioParams& params) {
  if (bits < 0.0) throw std::invalid_argument("tx_energy: negative bit count");
  if (d < 0.0) throw std::invalid_argument("tx_energy: negative distance");
  double d2 = d * d;
  double amp = d < params.d0 ? params.eps_fs * d2 : params.eps_mp * d2 * d2;
  return bits * params.e_elec + bits * amp;
}

double rx_energy(double bits, const RadioParams& params) {
  if (bits < 0.0) throw std::invalid_argument("rx_energy: negative bit count");
  return bits * params.e_elec;
}

double crossover_distance(const RadioParams& params) {
  return std::sqrt(params.eps_fs / params.eps_mp);
}

double aggregation_energy(double bits, double message_count, const RadioParams& params) {
  if (message_count < 0.0) throw std::invalid_argument("aggregation_energy: negative count");
  return message_count * bits * params.e_da;
}

double ch_round_energy(double n, double k, double d_bs, const RadioParams& params) {
  if (!(k >= 1.0)) throw std::invalid_argument("ch_round_energy: k must be at least 1");
  if (n < k) throw std::invalid_argument("ch_round_energy: n must be at least k");
  const double L = params.message_bits;
  const double size = n / k;
  const double d2 = d_bs * d_bs;
  return (size - 1.0) * L * params.e_elec + size * L * params.e_da + L * params.e_elec +
         L * params.eps_mp * d2 * d2;
}

double nch_round_energy(double d_ch, const RadioParams& params) {
  const double L = params.message_bits;
  return L * params.e_elec + L * params.eps_fs * d_ch * d_ch;
}

double total_network_energy(double n, double k, double d_bs, double d_ch_sq,
                            const RadioParams& params) {
  if (!(k > 0.0)) throw std::invalid_argument("total_network_energy: k must be positive");
  const double d2 = d_bs * d_bs;
  return params.message_bits * (2.0 * n * params.e_elec + n * params.e_da +
                                k * params.eps_mp * d2 * d2 + n * params.eps_fs * d_ch_sq);
}

double expected_member_distance_sq(double region_side, double k) {
  return region_side * region_side / (2.0 * std::numbers::pi * k);
}

double optimal_cluster_count(double n, double region_side, double d_bs,
                             const RadioParams& params) {
  return std::sqrt(n / (2.0 * std::numbers::pi)) * crossover_distance(params) * region_side /
         (d_bs * d_bs);
}

double optimal_probability(double n, double k_opt) {
  if (!(n >= 1.0)) throw std::invalid_argument("optimal_probability: n must be at least 1");
  return std::clamp(k_opt / n, 0.0, 1.0);
}

}  // namespace wsn
