#pragma once

#include "qsnake/exec.hpp"
#include "qsnake/kronecker.hpp"
#include "qsnake/qlaurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsnake {

/// X(q) = (n-r over p)_q (n+1-p over r)_q. Throws DomainError unless
/// p, r >= 0 and p + r <= n.
QLaurent x_poly(int p, int r, int n);

/// [r + (n-r-p)(p+r)]/2 + alpha(P) for P in level (p, r) of G_n. Throws
/// DomainError if P lies in another level or p + r > n.
long long w_weight(const KroneckerGraph& g, const Matching& m, int p, int r);

/// Number of matchings in level (p, r) of G_n fixed by the reflection.
std::uint64_t fixed_points(int p, int r, int n);

/// (n over k)_q at q = -1 by the closed form: 0 if k odd and n even, else
/// binom(floor(n/2), floor(k/2)).
BigInt gauss_at_minus_one(int n, int k);

/// True for (p, r, n) mod 2 in {(1,0,0), (1,1,1), (0,1,1), (1,1,0)}.
bool vanishing_class(int p, int r, int n);

struct StembridgeRow {
  int n = 0, p = 0, r = 0;
  std::uint64_t level_size = 0;
  BigInt x_at_minus_one = 0;
  std::uint64_t fixed_count = 0;
  bool x_at_one_ok = false;        // X(1) = level size
  bool weights_ok = false;         // {w(P)} = exponents of X with multiplicity
  bool palindromic = false;        // sum q^alpha is bar-invariant
  bool involution_ok = false;      // sigma preserves the level and squares to 1
  bool closed_form_ok = false;     // X(-1) from the closed form at q = -1
  bool pass = false;
};

/// All levels p + r <= n <= n_max.
std::vector<StembridgeRow> stembridge_table(int n_max, Exec exec = Exec::parallel);

/// Columns n,p,r,level_size,X(-1),fixed_count,pass.
std::string stembridge_csv(const std::vector<StembridgeRow>& rows);

}  // namespace qsnake
