#include "qsnake/lattice.hpp"

#include "qsnake/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace qsnake {

std::string LatticeCheck::summary() const {
  std::ostringstream os;
  os << "injective=" << twist_sets_injective << " single_twist=" << single_twist_edges
     << " extrema=" << unique_extrema << " hasse=" << hasse_equals_covers << " order=" << order_is_inclusion
     << " distributive=" << distributive << " bfs=" << bfs_twists_agree;
  return os.str();
}

MatchingLattice lattice_of(const SnakeGraph& g, Exec exec) {
  MatchingLattice lat;
  lat.nodes = enumerate_matchings(g, exec);
  std::unordered_map<EdgeSet, int> index;
  for (int i = 0; i < static_cast<int>(lat.nodes.size()); ++i) index.emplace(lat.nodes[static_cast<std::size_t>(i)].edges, i);

  for (int i = 0; i < static_cast<int>(lat.nodes.size()); ++i) {
    const Matching& p = lat.nodes[static_cast<std::size_t>(i)];
    for (int t = 0; t < g.num_tiles(); ++t) {
      const auto q = twist_tile(g, p.edges, t);
      if (!q) continue;
      const int j = index.at(*q);
      if (j < i) continue;  // each edge is seen from both ends
      const bool up = std::popcount(lat.nodes[static_cast<std::size_t>(j)].twist) > std::popcount(p.twist);
      LatticeEdge e{up ? i : j, up ? j : i, t, g.tiles()[static_cast<std::size_t>(t)].face_weight};
      lat.edges.push_back(e);
    }
  }
  std::sort(lat.edges.begin(), lat.edges.end(), [](const LatticeEdge& a, const LatticeEdge& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  const EdgeSet pmin = minimal_matching(g);
  const EdgeSet pmax = maximal_matching(g);
  lat.min_node = index.at(pmin);
  lat.max_node = index.at(pmax);
  return lat;
}

LatticeCheck check_lattice(const SnakeGraph& g, const MatchingLattice& lat, Exec exec) {
  LatticeCheck c;
  const int n = static_cast<int>(lat.nodes.size());
  std::vector<TileSet> tw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tw[static_cast<std::size_t>(i)] = lat.nodes[static_cast<std::size_t>(i)].twist;
  std::unordered_set<TileSet> twist_values(tw.begin(), tw.end());
  c.twist_sets_injective = static_cast<int>(twist_values.size()) == n;

  std::vector<int> down(static_cast<std::size_t>(n), 0), up(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
  for (const auto& e : lat.edges) {
    const TileSet lo = tw[static_cast<std::size_t>(e.lower)], hi = tw[static_cast<std::size_t>(e.upper)];
    if ((lo & hi) != lo || (hi ^ lo) != (TileSet{1} << e.tile)) c.single_twist_edges = false;
    ++up[static_cast<std::size_t>(e.lower)];
    ++down[static_cast<std::size_t>(e.upper)];
    above[static_cast<std::size_t>(e.lower)].push_back(e.upper);
  }

  int sources = 0, sinks = 0;
  for (int i = 0; i < n; ++i) {
    if (down[static_cast<std::size_t>(i)] == 0) {
      ++sources;
      if (i != lat.min_node || tw[static_cast<std::size_t>(i)] != 0) c.unique_extrema = false;
    }
    if (up[static_cast<std::size_t>(i)] == 0) {
      ++sinks;
      if (i != lat.max_node) c.unique_extrema = false;
    }
  }
  if (sources != 1 || sinks != 1) c.unique_extrema = false;

  // Covers of the inclusion order, by brute force.
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i) {
    const TileSet a = tw[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const TileSet b = tw[static_cast<std::size_t>(j)];
      if (a == b || (a & b) != a) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) {
        const TileSet m = tw[static_cast<std::size_t>(k)];
        if (m != a && m != b && (a & m) == a && (m & b) == m) cover = false;
      }
      if (cover) covers[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  for (int i = 0; i < n; ++i) {
    auto lhs = above[static_cast<std::size_t>(i)];
    std::sort(lhs.begin(), lhs.end());
    if (lhs != covers[static_cast<std::size_t>(i)]) c.hasse_equals_covers = false;
  }

  // Reachability along upward edges, processed by decreasing twist size.
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(tw[static_cast<std::size_t>(a)]) > std::popcount(tw[static_cast<std::size_t>(b)]);
  });
  for (int i : order) {
    auto& r = reach[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
    for (int j : above[static_cast<std::size_t>(i)]) {
      for (std::size_t w = 0; w < words; ++w) r[w] |= reach[static_cast<std::size_t>(j)][w];
    }
  }
  for (int i = 0; i < n && c.order_is_inclusion; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool reachable = (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
      const bool included = (tw[static_cast<std::size_t>(i)] & tw[static_cast<std::size_t>(j)]) == tw[static_cast<std::size_t>(i)];
      if (reachable != included) {
        c.order_is_inclusion = false;
        break;
      }
    }
  }

  for (int i = 0; i < n && c.distributive; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const TileSet a = tw[static_cast<std::size_t>(i)], b = tw[static_cast<std::size_t>(j)];
      if (!twist_values.count(a & b) || !twist_values.count(a | b)) {
        c.distributive = false;
        break;
      }
    }
  }

  // Twist sets accumulated along single twists starting from P_min.
  std::unordered_map<EdgeSet, int> index;
  for (int i = 0; i < n; ++i) index.emplace(lat.nodes[static_cast<std::size_t>(i)].edges, i);
  std::vector<std::optional<TileSet>> acc(static_cast<std::size_t>(n));
  std::deque<int> queue{lat.min_node};
  acc[static_cast<std::size_t>(lat.min_node)] = 0;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int t = 0; t < g.num_tiles(); ++t) {
      const auto q = twist_tile(g, lat.nodes[static_cast<std::size_t>(i)].edges, t);
      if (!q) continue;
      const int j = index.at(*q);
      const TileSet next = *acc[static_cast<std::size_t>(i)] ^ (TileSet{1} << t);
      if (!acc[static_cast<std::size_t>(j)]) {
        acc[static_cast<std::size_t>(j)] = next;
        queue.push_back(j);
      } else if (*acc[static_cast<std::size_t>(j)] != next) {
        c.bfs_twists_agree = false;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!acc[static_cast<std::size_t>(i)] || *acc[static_cast<std::size_t>(i)] != tw[static_cast<std::size_t>(i)]) {
      c.bfs_twists_agree = false;
    }
  }
  return c;
}

MatchingLattice build_lattice(const SnakeGraph& g, Exec exec) {
  MatchingLattice lat = lattice_of(g, exec);
  const LatticeCheck c = check_lattice(g, lat, exec);
  if (!c.ok()) throw InvariantViolation("matching lattice failed validation: " + c.summary());
  return lat;
}

std::string to_dot(const SnakeGraph& g, const MatchingLattice& lat, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    os << "  m" << i << " [label=\"{";
    const auto ws = twist_weights(g, lat.nodes[i].twist);
    for (std::size_t k = 0; k < ws.size(); ++k) os << (k ? "," : "") << ws[k];
    os << "}\"];\n";
  }
  for (const auto& e : lat.edges) {
    os << "  m" << e.lower << " -> m" << e.upper << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qsnake
