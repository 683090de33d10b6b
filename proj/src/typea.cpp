#include "qsnake/typea.hpp"

#include "qsnake/errors.hpp"
#include "qsnake/seed.hpp"

#include <bit>

namespace qsnake {

PathQuiver PathQuiver::parse(const std::string& orientation) {
  for (char c : orientation) {
    if (c != '<' && c != '>') throw DomainError("orientation may only contain '<' and '>'");
  }
  return PathQuiver{static_cast<int>(orientation.size()) + 1, orientation};
}

std::vector<PathQuiver> PathQuiver::all(int n) {
  if (n < 1 || n > 20) throw DomainError("PathQuiver::all: need 1 <= n <= 20");
  std::vector<PathQuiver> out;
  const int edges = n - 1;
  for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
    std::string s(static_cast<std::size_t>(edges), '<');
    for (int i = 0; i < edges; ++i) {
      if ((mask >> (edges - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '>';
    }
    out.push_back(PathQuiver{n, s});
  }
  return out;
}

bool PathQuiver::arrow(int i, int j) const {
  if (j == i + 1 && i >= 1 && j <= n) return orientation[static_cast<std::size_t>(i - 1)] == '>';
  if (i == j + 1 && j >= 1 && i <= n) return orientation[static_cast<std::size_t>(j - 1)] == '<';
  return false;
}

IntMatrix PathQuiver::exchange_matrix() const {
  IntMatrix b(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) b(i - 1, j - 1) = (arrow(j, i) ? 1 : 0) - (arrow(i, j) ? 1 : 0);
  }
  return b;
}

std::vector<int> subset_members(VertexSubset s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((s >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

VertexSubset ArcDatum::interval() const {
  VertexSubset t = 0;
  for (int i = a; i <= b; ++i) t |= VertexSubset{1} << (i - 1);
  return t;
}

ArcDatum ArcDatum::parse(const PathQuiver& q, const std::string& interval) {
  const auto dots = interval.find("..");
  if (dots == std::string::npos) throw DomainError("interval must look like a..b");
  int a = 0, b = 0;
  try {
    std::size_t used = 0;
    a = std::stoi(interval.substr(0, dots), &used);
    if (used != dots) throw DomainError("bad interval start");
    const std::string rest = interval.substr(dots + 2);
    b = std::stoi(rest, &used);
    if (used != rest.size()) throw DomainError("bad interval end");
  } catch (const std::logic_error&) {
    throw DomainError("interval must look like a..b");
  }
  if (a < 1 || b < a || b > q.n) throw DomainError("interval out of range for the quiver");
  return ArcDatum{q, a, b};
}

std::vector<ArcDatum> all_arcs(const PathQuiver& q) {
  std::vector<ArcDatum> out;
  for (int a = 1; a <= q.n; ++a)
    for (int b = a; b <= q.n; ++b) out.push_back(ArcDatum{q, a, b});
  return out;
}

bool is_successor_closed(const ArcDatum& d, VertexSubset s) {
  const VertexSubset t = d.interval();
  if ((s & t) != s) return false;
  for (int j : subset_members(s)) {
    for (int i : {j - 1, j + 1}) {
      if (i < d.a || i > d.b) continue;
      if (d.quiver.arrow(j, i) && !((s >> (i - 1)) & 1U)) return false;
    }
  }
  return true;
}

std::vector<VertexSubset> successor_closed_subsets(const ArcDatum& d) {
  std::vector<VertexSubset> out;
  const int len = d.b - d.a + 1;
  for (VertexSubset local = 0; local < (VertexSubset{1} << len); ++local) {
    const VertexSubset s = local << (d.a - 1);
    if (is_successor_closed(d, s)) out.push_back(s);
  }
  return out;
}

int phi(const ArcDatum&, VertexSubset s) {
  // Full subquivers of a path: components are maximal runs of consecutive vertices.
  return std::popcount(s & ~(s << 1));
}

int phi_by_arrows(const ArcDatum& d, VertexSubset s) {
  int arrows = 0;
  for (int k : subset_members(s)) {
    for (int j : {k - 1, k + 1}) {
      if (j >= d.a && j <= d.b && d.quiver.arrow(k, j)) ++arrows;
    }
  }
  return std::popcount(s) - arrows;
}

std::vector<int> tran_g_vector(const ArcDatum& d) {
  const int n = d.quiver.n;
  std::vector<int> g(static_cast<std::size_t>(2 * n), 0);
  for (int s = std::max(1, d.a - 1); s <= std::min(n, d.b + 1); ++s) {
    int out_arrows = 0;
    for (int j : {s - 1, s + 1}) {
      if (j >= d.a && j <= d.b && d.quiver.arrow(s, j)) ++out_arrows;
    }
    const bool inside = s >= d.a && s <= d.b;
    g[static_cast<std::size_t>(s - 1)] = out_arrows - (inside ? 1 : 0);
  }
  return g;
}

SkewMatrixPtr typea_torus(const PathQuiver& q) {
  return std::make_shared<const SkewMatrix>(principal_pair(q.exchange_matrix()).second);
}

std::vector<int> b_vector(const PathQuiver& q, VertexSubset s) {
  const IntMatrix b = principal_pair(q.exchange_matrix()).first;
  std::vector<int> v(static_cast<std::size_t>(2 * q.n), 0);
  for (int k : subset_members(s)) {
    for (int i = 0; i < 2 * q.n; ++i) v[static_cast<std::size_t>(i)] += b(i, k - 1);
  }
  return v;
}

TorusElement quantum_F_polynomial(const ArcDatum& d, const SkewMatrixPtr& torus) {
  TorusElement f(torus);
  for (VertexSubset s : successor_closed_subsets(d)) {
    f += TorusElement::monomial(torus, b_vector(d.quiver, s), QLaurent::monomial(phi(d, s)));
  }
  return f;
}

TorusElement expand_arc(const ArcDatum& d) {
  const auto torus = typea_torus(d.quiver);
  const TorusElement x = quantum_F_polynomial(d, torus) * TorusElement::monomial(torus, tran_g_vector(d));
  for (const auto& [a, c] : x.terms()) {
    if (!(c == QLaurent(1))) {
      throw InvariantViolation("expand_arc: coefficient " + c.to_string() + " is not 1 for arc " +
                               d.quiver.orientation + " [" + std::to_string(d.a) + "," + std::to_string(d.b) + "]");
    }
  }
  return x;
}

SnakeGraph build_typea_snake(const ArcDatum& d) {
  std::vector<Tile> tiles;
  for (int i = d.a; i <= d.b; ++i) tiles.push_back(Tile{i, i, {}});
  std::vector<Step> shape;
  for (int i = d.a + 1; i <= d.b; ++i) {
    if (shape.empty()) {
      shape.push_back(Step::Right);
      continue;
    }
    const bool same_way = d.quiver.arrow(i - 2, i - 1) == d.quiver.arrow(i - 1, i);
    const Step prev = shape.back();
    shape.push_back(same_way ? (prev == Step::Right ? Step::Up : Step::Right) : prev);
  }
  const bool sink = !(d.b > d.a && d.quiver.arrow(d.a, d.a + 1));
  return SnakeGraph(std::move(tiles), std::move(shape), EdgeAddress{0, sink ? Side::N : Side::W});
}

}  // namespace qsnake
