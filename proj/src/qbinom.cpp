#include "qsnake/qbinom.hpp"

#include "qsnake/errors.hpp"

#include <string>
#include <vector>

namespace qsnake {
namespace {

void check_args(const char* what, int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError(std::string(what) + ": need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
}

}  // namespace

QLaurent qint(int n) {
  if (n < 0) throw DomainError("qint: negative argument");
  QLaurent out;
  for (int k = 0; k < n; ++k) out += QLaurent::monomial(2 * k + 1 - n);
  return out;
}

QLaurent qbinom(int n, int k) {
  check_args("qbinom", n, k);
  // row[j] holds [m over j]_q for the current m.
  std::vector<QLaurent> row{QLaurent(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<QLaurent> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j >= 1) next[j] += row[j - 1].shifted(-(m - j));
      if (j <= m - 1) next[j] += row[j].shifted(j);
    }
    row = std::move(next);
  }
  return row[k];
}

QLaurent gauss_int(int n) {
  if (n < 0) throw DomainError("gauss_int: negative argument");
  QLaurent out;
  for (int k = 0; k < n; ++k) out += QLaurent::monomial(2 * k);
  return out;
}

QLaurent gauss_binom(int n, int k) {
  check_args("gauss_binom", n, k);
  std::vector<QLaurent> row{QLaurent(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<QLaurent> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j >= 1) next[j] += row[j - 1];
      if (j <= m - 1) next[j] += row[j].shifted(2 * j);
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qsnake
