#pragma once

#include "qsnake/snake.hpp"

#include <string>
#include <vector>

namespace qsnake {

struct LatticeEdge {
  int lower = 0;  // node indices; Twist(upper) = Twist(lower) + {tile}
  int upper = 0;
  int tile = 0;
  int label = 0;  // face weight of the twisted tile
};

struct MatchingLattice {
  std::vector<Matching> nodes;   // enumeration order
  std::vector<LatticeEdge> edges;  // sorted by (lower, upper)
  int min_node = 0;
  int max_node = 0;
};

struct LatticeCheck {
  bool twist_sets_injective = true;
  bool single_twist_edges = true;      // every edge adds exactly its tile
  bool unique_extrema = true;
  bool hasse_equals_covers = true;     // edges are exactly the covers of inclusion
  bool order_is_inclusion = true;      // reachability equals inclusion
  bool distributive = true;            // unions and intersections are twist sets
  bool bfs_twists_agree = true;        // ray-cast twist sets = sets accumulated along twists
  bool ok() const {
    return twist_sets_injective && single_twist_edges && unique_extrema && hasse_equals_covers &&
           order_is_inclusion && distributive && bfs_twists_agree;
  }
  std::string summary() const;
};

/// Nodes and single-twist edges, without validation.
MatchingLattice lattice_of(const SnakeGraph& g, Exec exec = Exec::parallel);

LatticeCheck check_lattice(const SnakeGraph& g, const MatchingLattice& lat, Exec exec = Exec::parallel);

/// lattice_of + check_lattice; throws InvariantViolation if a check fails.
MatchingLattice build_lattice(const SnakeGraph& g, Exec exec = Exec::parallel);

/// Nodes m0, m1, ... in enumeration order labelled by the multiset of twisted
/// face weights; edges labelled by the twisted tile's face weight.
std::string to_dot(const SnakeGraph& g, const MatchingLattice& lat, const std::string& name = "lattice");

}  // namespace qsnake
