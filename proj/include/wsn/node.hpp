#pragma once

#include "wsn/topology.hpp"

namespace wsn {

/// Mutable per-run state of one sensor.
struct Node {
  NodeId id = 0;
  Position position;
  double d_bs = 0.0;
  double e_init = 0.0;
  double e_residual = 0.0;
  bool alive = true;
  bool in_g = true;  // not yet cluster head in the current epoch
};

}  // namespace wsn
