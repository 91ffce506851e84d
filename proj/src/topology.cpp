#include "wsn/topology.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wsn/rng.hpp"
#include "wsn/text.hpp"

namespace wsn {

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

Topology::Topology(std::vector<Position> positions, Position base_station, double region_side)
    : base_station_(base_station), region_side_(region_side), d_avg_(0.0) {
  if (positions.empty()) throw std::invalid_argument("topology needs at least one node");
  if (!(region_side > 0.0)) throw std::invalid_argument("region_side must be positive");

  sites_.reserve(positions.size());
  double sum = 0.0;
  for (NodeId id = 0; id < positions.size(); ++id) {
    double d = distance(positions[id], base_station);
    sites_.push_back(Site{id, positions[id], d});
    sum += d;
  }
  d_avg_ = sum / static_cast<double>(sites_.size());
}

Topology generate_topology(std::size_t n, double region_side, double bs_offset,
                           std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (!(region_side > 0.0)) throw std::invalid_argument("region_side must be positive");
  if (!(bs_offset >= 0.0)) throw std::invalid_argument("bs_offset must be non-negative");

  Rng rng(seed);
  std::vector<Position> positions(n);
  for (auto& pos : positions) {
    pos.x = rng.uniform(0.0, region_side);
    pos.y = rng.uniform(0.0, region_side);
  }
  return Topology(std::move(positions), Position{region_side / 2.0, region_side + bs_offset},
                  region_side);
}

double average_distance(const Topology& topology) { return topology.average_distance(); }

void write_topology_csv(std::ostream& out, const Topology& topology) {
  out << "# bs_x=" << format_real(topology.base_station().x)
      << ",bs_y=" << format_real(topology.base_station().y)
      << ",region_side=" << format_real(topology.region_side()) << '\n';
  out << "id,x,y\n";
  for (const auto& site : topology.sites()) {
    out << site.id << ',' << format_real(site.position.x) << ','
        << format_real(site.position.y) << '\n';
  }
}

namespace {

double require_real(std::string_view text, const char* what) {
  auto v = parse_real(text);
  if (!v) throw std::runtime_error(std::string("topology csv: bad ") + what + " '" +
                                   std::string(text) + "'");
  return *v;
}

}  // namespace

Topology read_topology_csv(std::istream& in) {
  std::string line;
  std::optional<Position> bs;
  std::optional<double> side;
  std::vector<Position> positions;
  bool header_seen = false;

  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      view.remove_prefix(1);
      Position p;
      for (auto field : split(view, ',')) {
        auto kv = split(field, '=');
        if (kv.size() != 2) continue;
        auto key = trim(kv[0]);
        if (key == "bs_x") p.x = require_real(kv[1], "bs_x");
        else if (key == "bs_y") p.y = require_real(kv[1], "bs_y");
        else if (key == "region_side") side = require_real(kv[1], "region_side");
        else continue;
        bs = p;
      }
      continue;
    }
    if (!header_seen) {
      if (view != "id,x,y") throw std::runtime_error("topology csv: expected header id,x,y");
      header_seen = true;
      continue;
    }
    auto fields = split(view, ',');
    if (fields.size() != 3) throw std::runtime_error("topology csv: expected 3 fields per row");
    auto id = parse_unsigned(fields[0]);
    if (!id || *id != positions.size())
      throw std::runtime_error("topology csv: ids must be contiguous from 0");
    positions.push_back({require_real(fields[1], "x"), require_real(fields[2], "y")});
  }
  if (!bs || !side) throw std::runtime_error("topology csv: missing base station comment line");
  return Topology(std::move(positions), *bs, *side);
}

}  // namespace wsn
