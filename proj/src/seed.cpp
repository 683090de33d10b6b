#include "qsnake/seed.hpp"

#include "qsnake/errors.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>

namespace qsnake {

std::pair<IntMatrix, SkewMatrix> principal_pair(const IntMatrix& btilde) {
  if (!btilde.is_skew_symmetric()) throw DomainError("principal_pair: exchange matrix must be skew-symmetric");
  const int n = btilde.rows();
  IntMatrix b(2 * n, n);
  std::vector<std::vector<int>> lam(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, j) = btilde(i, j);
      lam[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(n + j)] = -btilde(i, j);
    }
    b(n + i, i) = 1;
    lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = -1;
    lam[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i)] = 1;
  }
  return {b, SkewMatrix(lam)};
}

std::vector<TorusElement> QuantumSeed::variables() const {
  std::vector<TorusElement> z = cluster;
  z.insert(z.end(), frozen.begin(), frozen.end());
  return z;
}

QuantumSeed initial_seed(const IntMatrix& btilde) {
  auto [b, lam] = principal_pair(btilde);
  const int n = btilde.rows();
  auto torus = std::make_shared<const SkewMatrix>(lam);
  QuantumSeed s;
  s.b = b;
  s.lambda_current = IntMatrix(lam.rows());
  for (int i = 0; i < 2 * n; ++i) {
    Exponent e(static_cast<std::size_t>(2 * n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    (i < n ? s.cluster : s.frozen).push_back(TorusElement::monomial(torus, e));
  }
  return s;
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  IntMatrix out(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const int bik = b(i, k);
        const int bkj = b(k, j);
        out(i, j) = b(i, j) + (bik * std::abs(bkj) + std::abs(bik) * bkj) / 2;
      }
    }
  }
  return out;
}

TorusElement normalized_product(const std::vector<TorusElement>& z, const IntMatrix& lambda,
                                const std::vector<int>& a) {
  const int m = static_cast<int>(z.size());
  long long twist = 0;  // doubled exponent: sum_{i<j} a_i a_j lambda_ji
  TorusElement out = TorusElement::identity(z.front().lambda());
  for (int i = 0; i < m; ++i) {
    const int ai = a[static_cast<std::size_t>(i)];
    if (ai < 0) throw DomainError("normalized_product: negative exponent");
    for (int j = i + 1; j < m; ++j) twist += static_cast<long long>(ai) * a[static_cast<std::size_t>(j)] * lambda(j, i);
    for (int t = 0; t < ai; ++t) out = out * z[static_cast<std::size_t>(i)];
  }
  return QLaurent::monomial(static_cast<int>(twist)) * out;
}

QuantumSeed mutate(const QuantumSeed& s, int k) {
  const int n = s.rank();
  if (k < 1 || k > n) throw DomainError("mutate: index " + std::to_string(k) + " out of range");
  const int kk = k - 1;
  const int m = 2 * n;
  const std::vector<TorusElement> z = s.variables();
  std::vector<int> bplus(static_cast<std::size_t>(m), 0), bminus(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const int v = s.b(i, kk);
    (v > 0 ? bplus : bminus)[static_cast<std::size_t>(i)] = std::abs(v);
  }
  auto exchange_term = [&](const std::vector<int>& bv) {
    long long shift = 0;
    for (int j = 0; j < m; ++j) shift += static_cast<long long>(s.lambda_current(kk, j)) * bv[static_cast<std::size_t>(j)];
    return QLaurent::monomial(static_cast<int>(shift)) * normalized_product(z, s.lambda_current, bv);
  };
  const TorusElement rhs = exchange_term(bplus) + exchange_term(bminus);

  TorusElement fresh;
  try {
    fresh = left_quotient(z[static_cast<std::size_t>(kk)], rhs);
  } catch (const InexactDivision& e) {
    throw InvariantViolation(std::string("mutate: exchange relation is not exactly divisible: ") + e.what());
  }

  QuantumSeed out = s;
  out.cluster[static_cast<std::size_t>(kk)] = fresh;
  out.b = mutate_matrix(s.b, kk);
  out.history.push_back(k);
  for (int j = 0; j < m; ++j) {
    if (j == kk) continue;
    const int e = commutation_exponent(fresh, z[static_cast<std::size_t>(j)]);
    if (e % 2 != 0) throw InvariantViolation("mutate: odd commutation exponent after mutation");
    out.lambda_current(kk, j) = e / 2;
    out.lambda_current(j, kk) = -e / 2;
  }
  return out;
}

QuantumSeed mutate_sequence(QuantumSeed s, const std::vector<int>& ks) {
  for (int k : ks) s = mutate(s, k);
  return s;
}

std::vector<int> g_vector(const TorusElement& x, const IntMatrix& btilde) {
  const int n = btilde.rows();
  if (x.dim() != 2 * n) throw DimensionMismatch("g_vector: torus rank does not match the exchange matrix");
  if (x.is_zero()) throw InhomogeneousElement("g_vector: zero element has no degree");
  std::vector<int> deg;
  for (const auto& [a, c] : x.terms()) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int v = a[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) v -= btilde(i, j) * a[static_cast<std::size_t>(n + j)];
      d[static_cast<std::size_t>(i)] = v;
    }
    if (deg.empty()) {
      deg = d;
    } else if (d != deg) {
      throw InhomogeneousElement("g_vector: terms of different degree in " + x.to_string());
    }
  }
  return deg;
}

IntMatrix g_matrix(const QuantumSeed& s, const IntMatrix& btilde) {
  const int n = s.rank();
  IntMatrix g(n, n);
  for (int j = 0; j < n; ++j) {
    const auto col = g_vector(s.cluster[static_cast<std::size_t>(j)], btilde);
    for (int i = 0; i < n; ++i) g(i, j) = col[static_cast<std::size_t>(i)];
  }
  return g;
}

IntMatrix c_matrix(const QuantumSeed& s) { return s.b.block(s.rank(), 0, s.rank(), s.rank()); }

QuantizationReport verify_quantization(const QuantumSeed& s, const IntMatrix& btilde) {
  QuantizationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    rep.failures.push_back(std::move(msg));
  };
  const int n = s.rank();
  const IntMatrix g = g_matrix(s, btilde);
  const IntMatrix c = c_matrix(s);
  const IntMatrix bt = s.b.block(0, 0, n, n);
  const IntMatrix gt = g.transpose();

  const IntMatrix lower_right = g * bt.transpose() * gt;
  IntMatrix expected(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      expected(i, n + j) = -gt(i, j);
      expected(n + i, j) = g(i, j);
      expected(n + i, n + j) = lower_right(i, j);
    }
  }
  if (!(expected == s.lambda_current)) {
    fail("quasi-commutation matrix " + s.lambda_current.to_string() + " differs from block form " + expected.to_string());
  }

  if (!(c * gt == IntMatrix::identity(n))) fail("C G^T = " + (c * gt).to_string() + " is not the identity");

  for (int j = 0; j < n; ++j) {
    bool pos = false, neg = false;
    for (int i = 0; i < n; ++i) {
      pos = pos || c(i, j) > 0;
      neg = neg || c(i, j) < 0;
    }
    if (pos == neg) fail("c-vector " + std::to_string(j + 1) + " is not sign-coherent");
  }

  const IntMatrix compat = s.b.transpose() * s.lambda_current;
  rep.compatibility_multiplier = compat(0, 0);
  IntMatrix want(n, 2 * n);
  for (int i = 0; i < n; ++i) want(i, i) = rep.compatibility_multiplier;
  if (!(compat == want)) {
    fail("B^T L = " + compat.to_string() + " is not of the form (kI 0)");
  } else if (rep.compatibility_multiplier != 1) {
    fail("compatibility multiplier is " + std::to_string(rep.compatibility_multiplier) + ", expected 1");
  }

  const auto z = s.variables();
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      int e = 0;
      try {
        e = commutation_exponent(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
      } catch (const NotQCommuting&) {
        fail("variables " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not q-commute");
        continue;
      }
      if (e != 2 * s.lambda_current(i, j)) {
        fail("stored quasi-commutation entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is stale");
      }
    }
  }
  return rep;
}

std::string element_key(const TorusElement& x) { return x.to_string(); }

namespace {

std::vector<std::string> seed_key(const QuantumSeed& s) {
  std::vector<std::string> key;
  key.reserve(s.cluster.size());
  for (const auto& x : s.cluster) key.push_back(element_key(x));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

BfsResult exchange_graph_bfs(const QuantumSeed& start, std::size_t max_seeds, Exec exec) {
  BfsResult res;
  std::set<std::vector<std::string>> seen;
  std::map<std::string, TorusElement> vars;
  auto record = [&](const QuantumSeed& s) {
    for (const auto& x : s.cluster) vars.emplace(element_key(x), x);
  };

  std::vector<QuantumSeed> frontier{start};
  seen.insert(seed_key(start));
  record(start);
  res.seeds = 1;
  const int n = start.rank();

  while (!frontier.empty()) {
    const long long tasks = static_cast<long long>(frontier.size()) * n;
    std::vector<QuantumSeed> next(static_cast<std::size_t>(tasks));
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (long long t = 0; t < tasks; ++t) {
      try {
        next[static_cast<std::size_t>(t)] = mutate(frontier[static_cast<std::size_t>(t / n)], static_cast<int>(t % n) + 1);
      } catch (...) {
#pragma omp critical
        err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);

    std::vector<QuantumSeed> fresh;
    for (auto& s : next) {
      if (!seen.insert(seed_key(s)).second) continue;
      if (res.seeds >= max_seeds) {
        res.complete = false;
        break;
      }
      ++res.seeds;
      record(s);
      fresh.push_back(std::move(s));
    }
    if (!res.complete) break;
    frontier = std::move(fresh);
  }
  for (auto& [k, x] : vars) res.variables.push_back(x);
  return res;
}

}  // namespace qsnake
