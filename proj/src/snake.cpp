#include "qsnake/snake.hpp"

#include "qsnake/errors.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <unordered_map>

namespace qsnake {
namespace {

std::pair<Point, Point> side_segment(Point o, Side s) {
  switch (s) {
    case Side::N: return {{o.x, o.y + 1}, {o.x + 1, o.y + 1}};
    case Side::E: return {{o.x + 1, o.y}, {o.x + 1, o.y + 1}};
    case Side::S: return {{o.x, o.y}, {o.x + 1, o.y}};
    case Side::W: return {{o.x, o.y}, {o.x, o.y + 1}};
  }
  return {};
}

constexpr std::array<Side, 4> kSides{Side::N, Side::E, Side::S, Side::W};

using VertexSet = std::bitset<4 * kMaxTiles + 4>;

// Depth-first search branching on the lowest uncovered vertex.
void search(const SnakeGraph& g, const EdgeSet& allowed, VertexSet& covered, EdgeSet& current, int start,
            std::vector<EdgeSet>& out) {
  const int nv = g.num_vertices();
  int v = start;
  while (v < nv && covered[static_cast<std::size_t>(v)]) ++v;
  if (v == nv) {
    out.push_back(current);
    return;
  }
  covered.set(static_cast<std::size_t>(v));
  for (const auto& [e, w] : g.adjacency()[static_cast<std::size_t>(v)]) {
    if (!allowed[static_cast<std::size_t>(e)] || covered[static_cast<std::size_t>(w)]) continue;
    covered.set(static_cast<std::size_t>(w));
    current.set(static_cast<std::size_t>(e));
    search(g, allowed, covered, current, v + 1, out);
    current.reset(static_cast<std::size_t>(e));
    covered.reset(static_cast<std::size_t>(w));
  }
  covered.reset(static_cast<std::size_t>(v));
}

std::vector<EdgeSet> boundary_matchings(const SnakeGraph& g) {
  EdgeSet allowed;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edges()[static_cast<std::size_t>(e)].boundary) allowed.set(static_cast<std::size_t>(e));
  }
  std::vector<EdgeSet> out;
  VertexSet covered;
  EdgeSet current;
  search(g, allowed, covered, current, 0, out);
  return out;
}

bool lex_less(const EdgeSet& a, const EdgeSet& b) {
  // Equal-size sets: the one holding the lowest differing edge sorts first.
  const EdgeSet d = a ^ b;
  if (d.none()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i]) return a[i];
  }
  return false;
}

}  // namespace

SnakeGraph::SnakeGraph(std::vector<Tile> tiles, std::vector<Step> shape, EdgeAddress pmin_edge)
    : tiles_(std::move(tiles)), shape_(std::move(shape)), pmin_edge_(pmin_edge) {
  if (tiles_.empty()) throw DomainError("SnakeGraph: use single_edge() for the graph without tiles");
  if (tiles_.size() > static_cast<std::size_t>(kMaxTiles)) throw DomainError("SnakeGraph: too many tiles");
  if (shape_.size() + 1 != tiles_.size()) throw DimensionMismatch("SnakeGraph: shape word must have #tiles - 1 letters");
  origins_.push_back({0, 0});
  for (Step s : shape_) {
    Point p = origins_.back();
    if (s == Step::Right) ++p.x; else ++p.y;
    origins_.push_back(p);
  }
  std::set<Point> distinct(origins_.begin(), origins_.end());
  if (distinct.size() != origins_.size()) throw InvariantViolation("SnakeGraph: tiles overlap");

  std::map<std::pair<Point, Point>, int> tile_count;
  for (int t = 0; t < num_tiles(); ++t) {
    for (Side s : kSides) {
      const auto seg = side_segment(origins_[static_cast<std::size_t>(t)], s);
      ++tile_count[seg];
      const int w = tiles_[static_cast<std::size_t>(t)].edge_weights[static_cast<std::size_t>(s)];
      auto it = edge_lookup_.find(seg);
      if (it != edge_lookup_.end()) {
        if (edges_[static_cast<std::size_t>(it->second)].weight == 0) edges_[static_cast<std::size_t>(it->second)].weight = w;
        continue;
      }
      edge_lookup_.emplace(seg, num_edges());
      edges_.push_back(Edge{EdgeAddress{t, s}, seg.first, seg.second, w, false});
    }
  }
  for (auto& e : edges_) e.boundary = tile_count[{e.a, e.b}] == 1;
  finish();
  const Edge& pe = edges_[static_cast<std::size_t>(edge_id(pmin_edge_))];
  if (!pe.boundary) throw DomainError("SnakeGraph: the P_min marker must be a boundary edge");
}

SnakeGraph SnakeGraph::single_edge() {
  SnakeGraph g;
  g.pmin_edge_ = EdgeAddress{0, Side::W};
  g.edges_.push_back(Edge{g.pmin_edge_, {0, 0}, {0, 1}, 0, true});
  g.edge_lookup_.emplace(std::pair{Point{0, 0}, Point{0, 1}}, 0);
  g.finish();
  return g;
}

void SnakeGraph::finish() {
  std::set<Point> pts;
  for (const auto& e : edges_) {
    pts.insert(e.a);
    pts.insert(e.b);
  }
  vertices_.assign(pts.begin(), pts.end());
  auto index = [this](Point p) {
    return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), p) - vertices_.begin());
  };
  adjacency_.assign(vertices_.size(), {});
  for (int id = 0; id < num_edges(); ++id) {
    const int a = index(edges_[static_cast<std::size_t>(id)].a);
    const int b = index(edges_[static_cast<std::size_t>(id)].b);
    adjacency_[static_cast<std::size_t>(a)].emplace_back(id, b);
    adjacency_[static_cast<std::size_t>(b)].emplace_back(id, a);
  }
  ray_masks_.assign(tiles_.size(), EdgeSet{});
  for (int t = 0; t < num_tiles(); ++t) {
    const Point o = origins_[static_cast<std::size_t>(t)];
    for (int id = 0; id < num_edges(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.vertical() && e.a.y == o.y && e.a.x > o.x) ray_masks_[static_cast<std::size_t>(t)].set(static_cast<std::size_t>(id));
    }
  }
}

bool SnakeGraph::is_straight() const {
  return std::all_of(shape_.begin(), shape_.end(), [](Step s) { return s == Step::Right; });
}

int SnakeGraph::edge_id(EdgeAddress addr) const {
  if (tiles_.empty()) {
    if (addr.side == Side::W || addr.side == Side::E) return 0;
    throw DomainError("edge_id: the tile-free graph has only a vertical edge");
  }
  if (addr.tile < 0 || addr.tile >= num_tiles()) throw DomainError("edge_id: tile index out of range");
  return edge_lookup_.at(side_segment(origins_[static_cast<std::size_t>(addr.tile)], addr.side));
}

std::optional<int> SnakeGraph::edge_between(Point a, Point b) const {
  if (b < a) std::swap(a, b);
  auto it = edge_lookup_.find({a, b});
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> edge_list(const EdgeSet& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> tile_list(TileSet t) {
  std::vector<int> out;
  for (int i = 0; i < kMaxTiles; ++i) {
    if ((t >> i) & 1U) out.push_back(i);
  }
  return out;
}

bool is_perfect_matching(const SnakeGraph& g, const EdgeSet& p) {
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const auto& [e, w] : g.adjacency()[static_cast<std::size_t>(v)]) {
      if (p[static_cast<std::size_t>(e)]) ++deg[static_cast<std::size_t>(v)];
    }
  }
  for (std::size_t i = static_cast<std::size_t>(g.num_edges()); i < p.size(); ++i) {
    if (p[i]) return false;
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

EdgeSet minimal_matching(const SnakeGraph& g) {
  const auto bm = boundary_matchings(g);
  const int marker = g.edge_id(g.pmin_edge());
  for (const auto& p : bm) {
    if (p[static_cast<std::size_t>(marker)]) return p;
  }
  throw InvariantViolation("minimal_matching: no boundary matching contains the marker edge");
}

EdgeSet maximal_matching(const SnakeGraph& g) {
  const auto bm = boundary_matchings(g);
  const int marker = g.edge_id(g.pmin_edge());
  for (const auto& p : bm) {
    if (!p[static_cast<std::size_t>(marker)]) return p;
  }
  return bm.front();  // the tile-free graph has a single matching
}

TileSet twist_set(const SnakeGraph& g, const EdgeSet& p) {
  return twist_sets(g, {p}, Exec::serial).front();
}

std::vector<TileSet> twist_sets(const SnakeGraph& g, const std::vector<EdgeSet>& ps, Exec exec) {
  const EdgeSet pmin = minimal_matching(g);
  const int nt = g.num_tiles();
  std::vector<TileSet> out(ps.size(), 0);
  const long long count = static_cast<long long>(ps.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long i = 0; i < count; ++i) {
    const EdgeSet sym = ps[static_cast<std::size_t>(i)] ^ pmin;
    TileSet t = 0;
    for (int k = 0; k < nt; ++k) {
      if ((sym & g.ray_mask(k)).count() % 2 == 1) t |= TileSet{1} << k;
    }
    out[static_cast<std::size_t>(i)] = t;
  }
  return out;
}

std::vector<Matching> enumerate_matchings(const SnakeGraph& g, Exec exec) {
  EdgeSet allowed;
  for (int e = 0; e < g.num_edges(); ++e) allowed.set(static_cast<std::size_t>(e));
  std::vector<EdgeSet> found;
  VertexSet covered;
  EdgeSet current;
  search(g, allowed, covered, current, 0, found);
  std::sort(found.begin(), found.end(), lex_less);
  const auto twists = twist_sets(g, found, exec);
  std::vector<Matching> out(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) out[i] = Matching{found[i], twists[i]};
  return out;
}

std::uint64_t count_matchings(const SnakeGraph& g) {
  // Memoized on the covered set, which (given that everything below the
  // branching vertex is covered) is the frontier profile.
  const int nv = g.num_vertices();
  std::unordered_map<VertexSet, std::uint64_t> memo;
  std::function<std::uint64_t(VertexSet&, int)> go = [&](VertexSet& covered, int start) -> std::uint64_t {
    int v = start;
    while (v < nv && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == nv) return 1;
    auto it = memo.find(covered);
    if (it != memo.end()) return it->second;
    const VertexSet key = covered;
    std::uint64_t total = 0;
    covered.set(static_cast<std::size_t>(v));
    for (const auto& [e, w] : g.adjacency()[static_cast<std::size_t>(v)]) {
      if (covered[static_cast<std::size_t>(w)]) continue;
      covered.set(static_cast<std::size_t>(w));
      total += go(covered, v + 1);
      covered.reset(static_cast<std::size_t>(w));
    }
    covered.reset(static_cast<std::size_t>(v));
    memo.emplace(key, total);
    return total;
  };
  VertexSet covered;
  return go(covered, 0);
}

std::optional<EdgeSet> twist_tile(const SnakeGraph& g, const EdgeSet& p, int t) {
  const auto id = [&](Side s) { return static_cast<std::size_t>(g.edge_id(t, s)); };
  const std::size_t n = id(Side::N), e = id(Side::E), s = id(Side::S), w = id(Side::W);
  EdgeSet q = p;
  if (p[n] && p[s]) {
    q.reset(n).reset(s).set(e).set(w);
    return q;
  }
  if (p[e] && p[w]) {
    q.reset(e).reset(w).set(n).set(s);
    return q;
  }
  return std::nullopt;
}

std::vector<int> twist_weights(const SnakeGraph& g, TileSet t) {
  std::vector<int> out;
  for (int k : tile_list(t)) out.push_back(g.tiles()[static_cast<std::size_t>(k)].face_weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> weight_monomial(const SnakeGraph& g, const EdgeSet& p) {
  std::map<int, int> out;
  for (int e : edge_list(p)) {
    const int w = g.edges()[static_cast<std::size_t>(e)].weight;
    if (w != 0) ++out[w];
  }
  return out;
}

std::vector<int> sigma_edge_map(const SnakeGraph& g) {
  if (!g.is_straight()) throw DomainError("sigma: graph is not straight");
  const int len = g.num_tiles();
  for (int k = 0; k < len; ++k) {
    const Tile& a = g.tiles()[static_cast<std::size_t>(k)];
    const Tile& b = g.tiles()[static_cast<std::size_t>(len - 1 - k)];
    const auto w = [](const Tile& t, Side s) { return t.edge_weights[static_cast<std::size_t>(s)]; };
    if (a.face_weight != b.face_weight || w(a, Side::N) != w(b, Side::N) || w(a, Side::S) != w(b, Side::S) ||
        w(a, Side::E) != w(b, Side::W)) {
      throw DomainError("sigma: graph is not reflection-symmetric");
    }
  }
  std::vector<int> map(static_cast<std::size_t>(g.num_edges()));
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edges()[static_cast<std::size_t>(id)];
    const auto image = g.edge_between({len - e.a.x, e.a.y}, {len - e.b.x, e.b.y});
    if (!image) throw InvariantViolation("sigma: reflected edge missing");
    map[static_cast<std::size_t>(id)] = *image;
  }
  return map;
}

EdgeSet apply_edge_map(const std::vector<int>& map, const EdgeSet& p) {
  EdgeSet out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (p[i]) out.set(static_cast<std::size_t>(map[i]));
  }
  return out;
}

EdgeSet sigma(const SnakeGraph& g, const EdgeSet& p) { return apply_edge_map(sigma_edge_map(g), p); }

// ---------------------------------------------------------------------------

namespace {

Tile kronecker_tile(int face_weight, int label) {
  Tile t;
  t.face_weight = face_weight;
  t.label = label;
  const int horizontal = face_weight == 1 ? 2 : 1;
  t.edge_weights[static_cast<std::size_t>(Side::N)] = horizontal;
  t.edge_weights[static_cast<std::size_t>(Side::S)] = horizontal;
  return t;
}

SnakeGraph straight_kronecker(const std::vector<int>& weights, int first_label) {
  std::vector<Tile> tiles;
  int first_one = -1;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    tiles.push_back(kronecker_tile(weights[k], first_label + static_cast<int>(k)));
    if (weights[k] == 1 && first_one < 0) first_one = static_cast<int>(k);
  }
  std::vector<Step> shape(tiles.size() - 1, Step::Right);
  const EdgeAddress marker = first_one < 0 ? EdgeAddress{0, Side::W} : EdgeAddress{first_one, Side::N};
  return SnakeGraph(std::move(tiles), std::move(shape), marker);
}

}  // namespace

SnakeGraph build_kronecker_G(int n) {
  if (n < 0) throw DomainError("build_kronecker_G: n must be nonnegative");
  std::vector<int> weights;
  for (int k = 0; k <= 2 * n; ++k) weights.push_back(k % 2 == 0 ? 1 : 2);
  return straight_kronecker(weights, -n);
}

SnakeGraph build_kronecker_G_swapped(int n) {
  if (n < 0) throw DomainError("build_kronecker_G_swapped: n must be nonnegative");
  std::vector<int> weights;
  for (int k = 0; k <= 2 * n; ++k) weights.push_back(k % 2 == 0 ? 2 : 1);
  return straight_kronecker(weights, -n);
}

std::string HConvention::name() const {
  std::string s = remove_first ? "remove-first" : "remove-last";
  s += weight1_offset < 0 ? ", alpha(H_i)=(i-1)/2" : ", alpha(H_i)=(i+1)/2";
  return s;
}

std::vector<HConvention> h_convention_candidates() {
  return {{false, -1}, {false, 1}, {true, -1}, {true, 1}};
}

SnakeGraph build_kronecker_H(int n, const HConvention& conv) {
  if (n < 0) throw DomainError("build_kronecker_H: n must be nonnegative");
  if (n == 0) return SnakeGraph::single_edge();
  std::vector<int> weights;
  for (int k = 0; k <= 2 * n; ++k) weights.push_back(k % 2 == 0 ? 1 : 2);
  if (conv.remove_first) {
    weights.erase(weights.begin());
  } else {
    weights.pop_back();
  }
  return straight_kronecker(weights, -n);
}

SnakeGraph build_demo_snake() {
  std::vector<Tile> tiles;
  int label = 1;
  for (int w : {3, 1, 2, 3, 1}) tiles.push_back(Tile{w, label++, {}});
  return SnakeGraph(std::move(tiles), {Step::Right, Step::Right, Step::Right, Step::Up}, EdgeAddress{0, Side::W});
}

SnakeGraph build_straight(int k) {
  if (k < 0) throw DomainError("build_straight: negative tile count");
  if (k == 0) return SnakeGraph::single_edge();
  std::vector<Tile> tiles;
  for (int i = 0; i < k; ++i) tiles.push_back(Tile{1, i, {}});
  return SnakeGraph(std::move(tiles), std::vector<Step>(static_cast<std::size_t>(k - 1), Step::Right),
                    EdgeAddress{0, Side::N});
}

}  // namespace qsnake
