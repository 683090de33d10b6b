#pragma once

#include "qsnake/exec.hpp"

#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsnake {

inline constexpr int kMaxTiles = 64;

using EdgeSet = std::bitset<4 * kMaxTiles>;
using TileSet = std::uint64_t;

enum class Side : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };
enum class Step : std::uint8_t { Right, Up };

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Tile {
  int face_weight = 0;
  int label = 0;                          // free-form index, e.g. i for G_i
  std::array<int, 4> edge_weights{};      // by Side; 0 means unweighted
};

struct EdgeAddress {
  int tile = 0;
  Side side = Side::N;
  friend auto operator<=>(const EdgeAddress&, const EdgeAddress&) = default;
};

struct Edge {
  EdgeAddress addr;  // canonical: the lowest-indexed tile containing the edge
  Point a, b;        // a < b
  int weight = 0;
  bool boundary = false;
  bool vertical() const { return a.x == b.x; }
};

/// Planar snake graph: tiles glued successively to the right or on top of
/// the previous one.
class SnakeGraph {
 public:
  /// `pmin_edge` is a boundary edge lying in the intended minimal matching;
  /// it decides which of the two boundary matchings is P_min.
  SnakeGraph(std::vector<Tile> tiles, std::vector<Step> shape, EdgeAddress pmin_edge);

  /// The graph with no tiles and a single vertical edge.
  static SnakeGraph single_edge();

  int num_tiles() const { return static_cast<int>(tiles_.size()); }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::vector<Step>& shape() const { return shape_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Point>& vertices() const { return vertices_; }
  Point tile_origin(int t) const { return origins_[static_cast<std::size_t>(t)]; }
  bool is_straight() const;

  /// Edge id of a (possibly non-canonical) address.
  int edge_id(EdgeAddress addr) const;
  int edge_id(int tile, Side side) const { return edge_id(EdgeAddress{tile, side}); }
  std::optional<int> edge_between(Point a, Point b) const;
  EdgeAddress pmin_edge() const { return pmin_edge_; }

  /// Edges crossed by the horizontal ray from the tile center to +infinity.
  const EdgeSet& ray_mask(int t) const { return ray_masks_[static_cast<std::size_t>(t)]; }
  /// Incident (edge id, other vertex) pairs per vertex, vertices in (x,y) order.
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const { return adjacency_; }

 private:
  SnakeGraph() = default;
  void finish();

  std::vector<Tile> tiles_;
  std::vector<Step> shape_;
  EdgeAddress pmin_edge_;
  std::vector<Point> origins_;
  std::vector<Edge> edges_;
  std::map<std::pair<Point, Point>, int> edge_lookup_;
  std::vector<Point> vertices_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<EdgeSet> ray_masks_;
};

struct Matching {
  EdgeSet edges;
  TileSet twist = 0;
};

std::vector<int> edge_list(const EdgeSet& p);
std::vector<int> tile_list(TileSet t);

/// All perfect matchings, sorted lexicographically by their sorted edge-id
/// lists, with twist sets filled in.
std::vector<Matching> enumerate_matchings(const SnakeGraph& g, Exec exec = Exec::parallel);

/// Count without materializing (transfer over vertices in (x,y) order).
std::uint64_t count_matchings(const SnakeGraph& g);

/// The boundary-only matchings; P_min contains g.pmin_edge().
EdgeSet minimal_matching(const SnakeGraph& g);
EdgeSet maximal_matching(const SnakeGraph& g);

bool is_perfect_matching(const SnakeGraph& g, const EdgeSet& p);

/// Tiles enclosed by cycles of P xor P_min (parity ray casting).
TileSet twist_set(const SnakeGraph& g, const EdgeSet& p);
/// twist_set over many matchings; the parallel and serial kernels agree.
std::vector<TileSet> twist_sets(const SnakeGraph& g, const std::vector<EdgeSet>& ps, Exec exec = Exec::parallel);

/// Matching obtained by flipping tile t, if t has two opposite edges in p.
std::optional<EdgeSet> twist_tile(const SnakeGraph& g, const EdgeSet& p, int t);

/// Face weights of twisted tiles, sorted.
std::vector<int> twist_weights(const SnakeGraph& g, TileSet t);
/// Edge-weight multiplicities of the matched edges (weight -> count), 0 excluded.
std::map<int, int> weight_monomial(const SnakeGraph& g, const EdgeSet& p);

/// Edge permutation induced by the left-right reflection of a straight,
/// reflection-symmetric graph. Throws DomainError otherwise.
std::vector<int> sigma_edge_map(const SnakeGraph& g);
EdgeSet apply_edge_map(const std::vector<int>& map, const EdgeSet& p);
EdgeSet sigma(const SnakeGraph& g, const EdgeSet& p);

// ---------------------------------------------------------------------------
// Kronecker snake graphs

/// Straight graph G_n with tiles G_{-n}, ..., G_n of face weights 1,2,...,1.
/// Horizontal edges of weight-1 tiles carry weight 2, those of weight-2 tiles
/// weight 1; vertical edges are unweighted. Tile labels are the indices i.
SnakeGraph build_kronecker_G(int n);

/// G_n with face weights 1 and 2 exchanged (edge weights follow the faces).
/// P_min is still the boundary matching through the horizontal edges of the
/// weight-1 tiles, i.e. the opposite end of the lattice compared to G_n.
SnakeGraph build_kronecker_G_swapped(int n);

/// Which tile of G_n is dropped to obtain H_n, and the offset o in
/// alpha(H_i) = (i + o)/2 for weight-1 tiles. Tiles of H_n are always labelled
/// H_{-n}, ..., H_{n-1} from left to right.
struct HConvention {
  bool remove_first = false;
  int weight1_offset = 1;
  std::string name() const;
  friend bool operator==(const HConvention&, const HConvention&) = default;
};

/// The four candidates, in a fixed order.
std::vector<HConvention> h_convention_candidates();

SnakeGraph build_kronecker_H(int n, const HConvention& conv);

/// Snake graph with face weights 3,1,2,3,1 and one turn, used as a worked
/// lattice example (11 matchings).
SnakeGraph build_demo_snake();

/// Straight graph with k tiles, all of face weight 1.
SnakeGraph build_straight(int k);

}  // namespace qsnake
