#pragma once

#include "qsnake/qlaurent.hpp"

namespace qsnake {

/// Quantum integer [n]_q = sum_{k=0}^{n-1} q^{(2k+1-n)/2}.
QLaurent qint(int n);

/// Quantum binomial [n over k]_q, built row by row from the quantum Pascal
/// rule so no polynomial division is needed. Throws DomainError if k > n or
/// either argument is negative.
QLaurent qbinom(int n, int k);

/// Gaussian integer (n)_q = 1 + q + ... + q^{n-1}.
QLaurent gauss_int(int n);

/// Gaussian binomial (n over k)_q in Z[q], via (n,k) = (n-1,k-1) + q^k (n-1,k).
QLaurent gauss_binom(int n, int k);

/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

}  // namespace qsnake
