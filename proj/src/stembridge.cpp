#include "qsnake/stembridge.hpp"

#include "qsnake/errors.hpp"
#include "qsnake/qbinom.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>
#include <sstream>

namespace qsnake {
namespace {

void check_level(int p, int r, int n) {
  if (p < 0 || r < 0 || n < 0 || p + r > n) {
    throw DomainError("level (p,r)=(" + std::to_string(p) + "," + std::to_string(r) + ") is outside p+r <= n=" +
                      std::to_string(n));
  }
}

// Doubled shift r + (n-r-p)(p+r).
long long shift2(int p, int r, int n) { return r + static_cast<long long>(n - r - p) * (p + r); }

}  // namespace

QLaurent x_poly(int p, int r, int n) {
  check_level(p, r, n);
  return gauss_binom(n - r, p) * gauss_binom(n + 1 - p, r);
}

long long w_weight(const KroneckerGraph& g, const Matching& m, int p, int r) {
  if (g.is_h) throw DomainError("w_weight: defined on G_n only");
  check_level(p, r, g.n);
  const auto [y1, y2] = y_degrees(g, m.twist);
  if (y2 != p || y1 != g.n + 1 - r) throw DomainError("w_weight: matching lies in a different level");
  const long long doubled = shift2(p, r, g.n) + alpha2(g, m.twist);
  if (doubled < 0 || doubled % 2 != 0) throw InvariantViolation("w_weight: weight is not a nonnegative integer");
  return doubled / 2;
}

std::uint64_t fixed_points(int p, int r, int n) {
  check_level(p, r, n);
  const KroneckerGraph g = kronecker_G(n);
  const auto levels = level_sets(g);
  auto it = levels.find({p, r});
  if (it == levels.end()) return 0;
  const auto map = sigma_edge_map(g.graph);
  return static_cast<std::uint64_t>(std::count_if(it->second.begin(), it->second.end(), [&](const Matching& m) {
    return apply_edge_map(map, m.edges) == m.edges;
  }));
}

BigInt gauss_at_minus_one(int n, int k) {
  if (k < 0 || k > n) throw DomainError("gauss_at_minus_one: need 0 <= k <= n");
  if (k % 2 == 1 && n % 2 == 0) return 0;
  return binomial(n / 2, k / 2);
}

bool vanishing_class(int p, int r, int n) {
  const int a = p % 2, b = r % 2, c = n % 2;
  return (a == 1 && b == 0 && c == 0) || (a == 1 && b == 1 && c == 1) || (a == 0 && b == 1 && c == 1) ||
         (a == 1 && b == 1 && c == 0);
}

namespace {

std::vector<StembridgeRow> rows_for(int n) {
  const KroneckerGraph g = kronecker_G(n);
  const auto levels = level_sets(g);
  const auto smap = sigma_edge_map(g.graph);
  std::vector<StembridgeRow> out;
  for (int p = 0; p <= n; ++p) {
    for (int r = 0; p + r <= n; ++r) {
      StembridgeRow row;
      row.n = n;
      row.p = p;
      row.r = r;
      const QLaurent x = x_poly(p, r, n);
      row.x_at_minus_one = eval_int(x, -1);
      auto it = levels.find({p, r});
      const std::vector<Matching> empty;
      const std::vector<Matching>& level = it == levels.end() ? empty : it->second;
      row.level_size = level.size();

      QLaurent alpha_sum, w_sum;
      bool in_level = true;
      std::unordered_set<EdgeSet> members;
      for (const Matching& m : level) members.insert(m.edges);
      for (const Matching& m : level) {
        alpha_sum += QLaurent::monomial(alpha2(g, m.twist));
        w_sum += QLaurent::monomial(static_cast<int>(2 * w_weight(g, m, p, r)));
        const EdgeSet image = apply_edge_map(smap, m.edges);
        if (image == m.edges) ++row.fixed_count;
        if (!members.count(image) || apply_edge_map(smap, image) != m.edges) in_level = false;
      }
      row.x_at_one_ok = eval_at_one(x) == BigInt(row.level_size);
      row.weights_ok = w_sum == x;
      row.palindromic = bar(alpha_sum) == alpha_sum;
      row.involution_ok = in_level && (row.level_size - row.fixed_count) % 2 == 0;
      const BigInt closed = gauss_at_minus_one(n - r, p) * gauss_at_minus_one(n + 1 - p, r);
      row.closed_form_ok = closed == row.x_at_minus_one && (!vanishing_class(p, r, n) || closed == 0);
      row.pass = row.x_at_minus_one == BigInt(row.fixed_count) && row.x_at_one_ok && row.weights_ok &&
                 row.palindromic && row.involution_ok && row.closed_form_ok;
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace

std::vector<StembridgeRow> stembridge_table(int n_max, Exec exec) {
  if (n_max < 0) throw DomainError("stembridge_table: n_max must be nonnegative");
  std::vector<std::vector<StembridgeRow>> per_n(static_cast<std::size_t>(n_max + 1));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int n = n_max; n >= 0; --n) {
    try {
      per_n[static_cast<std::size_t>(n)] = rows_for(n);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  std::vector<StembridgeRow> out;
  for (auto& rows : per_n) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::string stembridge_csv(const std::vector<StembridgeRow>& rows) {
  std::ostringstream os;
  os << "n,p,r,level_size,X(-1),fixed_count,pass\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.p << ',' << row.r << ',' << row.level_size << ',' << row.x_at_minus_one << ','
       << row.fixed_count << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace qsnake
