#pragma once

#include "qsnake/exec.hpp"
#include "qsnake/int_matrix.hpp"
#include "qsnake/torus.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsnake {

/// (B, L) with B = [Bt; I] and L = [[0, -I], [I, -Bt]].
/// Throws DomainError if Bt is not square and skew-symmetric.
std::pair<IntMatrix, SkewMatrix> principal_pair(const IntMatrix& btilde);

/// A quantum seed whose variables are stored as elements of the initial
/// torus. `lambda_current` is the quasi-commutation matrix of the current
/// variables (cluster first, then frozen), read off their commutation
/// exponents.
struct QuantumSeed {
  IntMatrix b;               // 2n x n
  IntMatrix lambda_current;  // 2n x 2n
  std::vector<TorusElement> cluster;
  std::vector<TorusElement> frozen;
  std::vector<int> history;  // 1-based mutation indices

  int rank() const { return b.cols(); }
  const SkewMatrixPtr& torus() const { return cluster.front().lambda(); }
  /// Cluster variables followed by frozen ones.
  std::vector<TorusElement> variables() const;
};

/// Seed (B, L, M[e_1..e_n], M[e_{n+1}..e_{2n}]) of the principal pair.
QuantumSeed initial_seed(const IntMatrix& btilde);

/// Mutation at k (1-based). The new variable is the exact left quotient of the
/// exchange binomial by the old one; failure of exactness raises
/// InvariantViolation.
QuantumSeed mutate(const QuantumSeed& s, int k);
QuantumSeed mutate_sequence(QuantumSeed s, const std::vector<int>& ks);

/// Fomin-Zelevinsky matrix mutation (k is 0-based).
IntMatrix mutate_matrix(const IntMatrix& b, int k);

/// c * prod z_i^{a_i} with the twist that turns it into the basis element
/// M_L[a] of the torus generated by z. Requires a >= 0.
TorusElement normalized_product(const std::vector<TorusElement>& z, const IntMatrix& lambda,
                                const std::vector<int>& a);

/// Degree under x_i -> e_i, y_i -> -b_i (columns of btilde). Throws
/// InhomogeneousElement if terms disagree.
std::vector<int> g_vector(const TorusElement& x, const IntMatrix& btilde);

/// Columns are g-vectors of the current cluster.
IntMatrix g_matrix(const QuantumSeed& s, const IntMatrix& btilde);
/// Bottom n x n block of the current B.
IntMatrix c_matrix(const QuantumSeed& s);

struct QuantizationReport {
  bool pass = true;
  int compatibility_multiplier = 0;  // observed k in B^T L = (k I 0)
  std::vector<std::string> failures;
};

/// Checks the block form of the quasi-commutation matrix in terms of the
/// G-matrix, C G^T = I, sign coherence of c-vectors, compatibility with k = 1
/// and pairwise q-commutation of all variables.
QuantizationReport verify_quantization(const QuantumSeed& s, const IntMatrix& btilde);

struct BfsResult {
  std::vector<TorusElement> variables;  // sorted by serialization
  std::size_t seeds = 0;
  bool complete = true;
};

/// Breadth-first search of the exchange graph, identifying seeds with equal
/// cluster sets. Stops early (complete = false) after max_seeds seeds.
BfsResult exchange_graph_bfs(const QuantumSeed& s, std::size_t max_seeds, Exec exec = Exec::parallel);

/// Deterministic text key used to compare cluster variables.
std::string element_key(const TorusElement& x);

}  // namespace qsnake
