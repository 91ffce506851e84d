#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wsn {

using NodeId = std::size_t;

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

/// Euclidean distance in meters.
double distance(Position a, Position b);

/// A deployed sensor: where it sits and how far it is from the base station.
struct Site {
  NodeId id = 0;
  Position position;
  double d_bs = 0.0;
};

/// Static deployment of a square sensing field and its base station.
/// Immutable once built.
class Topology {
 public:
  Topology(std::vector<Position> positions, Position base_station, double region_side);

  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  Position base_station() const { return base_station_; }
  double region_side() const { return region_side_; }

  /// Mean node-to-BS distance over all deployed nodes, fixed at construction.
  double average_distance() const { return d_avg_; }

 private:
  std::vector<Site> sites_;
  Position base_station_;
  double region_side_;
  double d_avg_;
};

/// Uniform i.i.d. placement in [0, region_side]^2 with the base station
/// centred above the top edge at (region_side / 2, region_side + bs_offset).
Topology generate_topology(std::size_t n, double region_side, double bs_offset,
                           std::uint64_t seed);

double average_distance(const Topology& topology);

/// CSV form: `# bs_x=..,bs_y=..,region_side=..`, then `id,x,y` rows.
void write_topology_csv(std::ostream& out, const Topology& topology);
Topology read_topology_csv(std::istream& in);

}  // namespace wsn
