#pragma once

#include "qsnake/exec.hpp"
#include "qsnake/int_matrix.hpp"
#include "qsnake/snake.hpp"
#include "qsnake/torus.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qsnake {

/// [[0,2],[-2,0]]
IntMatrix kronecker_btilde();
/// Torus of the Kronecker principal pair (shared instance).
const SkewMatrixPtr& kronecker_torus();
/// M[a0,a1,a2,a3] in the Kronecker torus.
TorusElement kmono(int a0, int a1, int a2, int a3, const QLaurent& c = 1);

/// x_{n+3} = M[-n-1,n+2,0,0] + sum c_{p,r,n} M[2p-n-1, 2r-n, n+1-r, p].
TorusElement x_via_qbinom(int n);

/// x_0, x_1, ..., x_top obtained from the initial seed: x_0 by mutating at 2,
/// x_3, x_4, ... by alternating mutations 1, 2, 1, ...
std::vector<TorusElement> x_via_mutation(int top);

/// x_{-m}, ..., x_0 by alternating mutations 2, 1, 2, ...; entry i is x_{-i}.
std::vector<TorusElement> x_negative_via_mutation(int m);

/// Cluster variable x_k for k >= 1 from the closed formula, x_k for k <= 0 from
/// mutation.
TorusElement kronecker_x(int k);

/// A Kronecker snake graph together with its per-tile alpha values and the
/// crossing monomial used for nu.
struct KroneckerGraph {
  SnakeGraph graph;
  int n = 0;
  bool is_h = false;
  std::vector<int> tile_alpha2;  // doubled alpha per tile
  int cross_x1 = 0;
  int cross_x2 = 0;
};

KroneckerGraph kronecker_G(int n);
KroneckerGraph kronecker_H(int n, const HConvention& conv);

/// Graph for x_{-n}: the swapped G_n, crossing monomial x1^n x2^{n+1}, and
/// alpha(G_i) = -i/2 on weight-1 tiles, i/2 on weight-2 tiles.
KroneckerGraph kronecker_G_negative(int n);

/// Doubled alpha(P).
int alpha2(const KroneckerGraph& kg, TileSet twist);
/// (number of twisted weight-1 tiles, number of twisted weight-2 tiles)
std::pair<int, int> y_degrees(const KroneckerGraph& kg, TileSet twist);
/// (deg x(P) - deg cross, y(P))
Exponent nu(const KroneckerGraph& kg, const Matching& p);

/// sum over perfect matchings of q^{alpha(P)} M[nu(P)].
TorusElement matching_expansion(const KroneckerGraph& kg, Exec exec = Exec::parallel);
/// Same sum from precomputed matchings.
TorusElement matching_expansion(const KroneckerGraph& kg, const std::vector<Matching>& ms, Exec exec = Exec::parallel);

/// r_n: matching expansion over G_n; equals x_{n+3}.
TorusElement x_via_matchings(int n, Exec exec = Exec::parallel);

/// x_{-n} as a matching expansion over the swapped graph.
TorusElement x_negative_via_matchings(int n, Exec exec = Exec::parallel);

/// s_n: matching expansion over H_n.
TorusElement s_elem(int n, const HConvention& conv, Exec exec = Exec::parallel);
TorusElement s_elem(int n);  // resolved convention

/// Level sets keyed by (p, r): for G_n y1 = n+1-r, y2 = p; for H_n y1 = n-r, y2 = p.
std::map<std::pair<int, int>, std::vector<Matching>> level_sets(const KroneckerGraph& kg);

// Coefficients --------------------------------------------------------------

/// Products of quantum binomials; zero outside the support.
QLaurent c_coeff(int p, int r, int n);
QLaurent d_coeff(int p, int r, int n);

using CoeffKey = std::tuple<int, int, int>;  // (p, r, n)
using CoeffFamily = std::map<CoeffKey, QLaurent>;

/// c, d from binomials; ctilde, dtilde by summing q^alpha over level sets.
/// Only nonzero entries are stored.
struct CoeffTables {
  CoeffFamily c, d, ctilde, dtilde;
  static QLaurent get(const CoeffFamily& f, int p, int r, int n);
};

CoeffTables coeff_tables(int n_max, const HConvention& conv);
CoeffTables coeff_tables(int n_max);

/// Pass/fail lines for one group of identity checks.
struct CheckReport {
  std::vector<std::pair<std::string, bool>> lines;
  bool pass() const;
  void add(std::string what, bool ok) { lines.emplace_back(std::move(what), ok); }
  void merge(const CheckReport& other);
};

/// The coefficient recursions (a)-(d) and the equalities c = ctilde,
/// d = dtilde for 1 <= n <= n_max.
CheckReport check_coefficient_recursions(const CoeffTables& t, int n_max);
CheckReport check_coefficient_equalities(const CoeffTables& t, int n_max);

/// x_n s_1 = x_{n+1} + q x_{n-1} y_1 y_2 for 2 <= n <= n_max.
CheckReport check_loop_recursion(int n_max);
/// r_n x1 = q^{1/2} s_n y1 + r_{n-1} x2 and x2 s_n = r_{n-1} + q^{-1/2} M[1,0,1,1] s_{n-1}.
CheckReport check_rs_recursions(int n_max, const HConvention& conv);
/// s_1 against its explicit three-term form and against x_0 x_3 - q^{1/2} x_1 x_2 y_2.
CheckReport check_s1(const HConvention& conv);
/// Both exchange relations between x_{n+2}, x_{n+3}, x_{n+4}.
CheckReport check_exchange_relations(int n_max);

struct HCandidateResult {
  HConvention conv;
  CheckReport report;
};

struct HResolution {
  std::vector<HCandidateResult> candidates;
  std::vector<HConvention> survivors;
};

/// Evaluates every candidate H_n convention on alpha = 0 over H_1, the s_1
/// identities, d = dtilde, the r/s recursions and the coefficient recursions
/// for n <= n_max.
HResolution resolve_h_convention(int n_max = 6);

/// The unique surviving convention (cached). Throws InvariantViolation if the
/// resolution is not unique.
const HConvention& resolved_h_convention();

// Classical limits ------------------------------------------------------------

/// x1^{-n-1} x2^{n+2} + sum binom(n-r,p) binom(n+1-p,r) x1^{2p-n-1} x2^{2r-n} y1^{n+1-r} y2^p.
ClassicalLaurent classical_x(int n);
/// (1 / cross) sum x(P) y(P) over matchings of G_n.
ClassicalLaurent classical_matching_x(int n);

}  // namespace qsnake
