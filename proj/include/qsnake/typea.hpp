#pragma once

#include "qsnake/int_matrix.hpp"
#include "qsnake/snake.hpp"
#include "qsnake/torus.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsnake {

/// Quiver on the path 1 - 2 - ... - n. orientation[i] is '>' for the arrow
/// (i+1) -> (i+2) and '<' for (i+2) -> (i+1) (vertices 1-based).
struct PathQuiver {
  int n = 1;
  std::string orientation;

  static PathQuiver parse(const std::string& orientation);
  /// All 2^{n-1} orientations, in lexicographic order of the strings.
  static std::vector<PathQuiver> all(int n);

  /// True iff there is an arrow i -> j (1-based).
  bool arrow(int i, int j) const;
  /// b_ij = #(j -> i) - #(i -> j), the sign under which the arc formulas
  /// produce the cluster variables of the principal seed.
  IntMatrix exchange_matrix() const;
};

/// Subsets of {1..n} as bitmasks, bit i-1 for vertex i.
using VertexSubset = std::uint32_t;

std::vector<int> subset_members(VertexSubset s);

struct ArcDatum {
  PathQuiver quiver;
  int a = 1;  // interval T = [a, b]
  int b = 1;

  VertexSubset interval() const;
  /// Parses "a..b".
  static ArcDatum parse(const PathQuiver& q, const std::string& interval);
};

/// All intervals [a,b] of the quiver, ordered by (a, b).
std::vector<ArcDatum> all_arcs(const PathQuiver& q);

/// Subsets S of T closed under arrows leaving S inside T, in increasing
/// bitmask order.
std::vector<VertexSubset> successor_closed_subsets(const ArcDatum& d);
bool is_successor_closed(const ArcDatum& d, VertexSubset s);

/// Number of connected components of the full subquiver on S.
int phi(const ArcDatum& d, VertexSubset s);

/// |S| minus the number of arrows from S into T.
int phi_by_arrows(const ArcDatum& d, VertexSubset s);

/// g-vector (g)_s = #{j in T : s -> j} - [s in T], padded with n zeros.
std::vector<int> tran_g_vector(const ArcDatum& d);

/// Torus of the principal pair of the quiver's exchange matrix.
SkewMatrixPtr typea_torus(const PathQuiver& q);

/// b_S: sum of the columns of the principal B over S.
std::vector<int> b_vector(const PathQuiver& q, VertexSubset s);

/// sum_S q^{Phi(S)/2} M[b_S].
TorusElement quantum_F_polynomial(const ArcDatum& d, const SkewMatrixPtr& torus);

/// F * M[g]. Throws InvariantViolation unless every coefficient is 1.
TorusElement expand_arc(const ArcDatum& d);

/// Snake graph of the arc with face weights a..b. Consecutive arrows pointing
/// the same way make the snake turn, alternating arrows keep it straight.
SnakeGraph build_typea_snake(const ArcDatum& d);

}  // namespace qsnake
