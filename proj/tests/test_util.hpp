#pragma once

#include "qsnake/kronecker.hpp"
#include "qsnake/torus.hpp"

#include <random>

namespace qsnake::testutil {

inline QLaurent random_qlaurent(std::mt19937& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), exp(-4, 4), coeff(-3, 3);
  QLaurent p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += QLaurent::monomial(exp(rng), coeff(rng));
  return p;
}

inline TorusElement random_element(std::mt19937& rng, const SkewMatrixPtr& lam, int max_terms = 5, int range = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms), e(-range, range);
  TorusElement x(lam);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponent a(static_cast<std::size_t>(lam->dim()));
    for (auto& v : a) v = e(rng);
    x.add_term(a, random_qlaurent(rng, 2));
  }
  return x;
}

inline bool nonnegative(const TorusElement& x) {
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [e, v] : c.terms()) {
      if (v < 0) return false;
    }
  }
  return true;
}

}  // namespace qsnake::testutil
