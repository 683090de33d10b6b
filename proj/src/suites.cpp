#include "qsnake/suites.hpp"

#include "qsnake/errors.hpp"
#include "qsnake/qbinom.hpp"
#include "qsnake/seed.hpp"
#include "qsnake/stembridge.hpp"

#include <algorithm>
#include <set>

namespace qsnake {

namespace {

std::string upto(int n_max) { return " for n <= " + std::to_string(n_max); }

void visit_rec(const QuantumSeed& s, int depth, int max_len, const std::function<void(const QuantumSeed&)>& visit) {
  visit(s);
  if (depth == max_len) return;
  for (int k = 1; k <= s.rank(); ++k) visit_rec(mutate(s, k), depth + 1, max_len, visit);
}

}  // namespace

void for_each_mutation_sequence(const QuantumSeed& start, int max_len,
                                const std::function<void(const QuantumSeed&)>& visit) {
  visit_rec(start, 0, max_len, visit);
}

CheckReport check_quantization(const IntMatrix& btilde, int max_len, const std::string& tag) {
  CheckReport rep;
  std::size_t seeds = 0, bad = 0;
  std::string first;
  for_each_mutation_sequence(initial_seed(btilde), max_len, [&](const QuantumSeed& s) {
    ++seeds;
    const auto r = verify_quantization(s, btilde);
    if (!r.pass) {
      if (bad++ == 0 && !r.failures.empty()) first = r.failures.front();
    }
  });
  std::string what = tag + ": quantization structure on " + std::to_string(seeds) + " seeds, sequences of length <= " +
                     std::to_string(max_len);
  if (bad) what += " (" + std::to_string(bad) + " failing, first: " + first + ")";
  rep.add(what, bad == 0);
  return rep;
}

CheckReport check_kronecker_routes(int n_max, Exec exec) {
  CheckReport rep;
  const auto mut = x_via_mutation(n_max + 3);
  const auto y1 = kmono(0, 0, 1, 0), y2 = kmono(0, 0, 0, 1);
  bool routes = true, commute = true;
  for (int n = 0; n <= n_max; ++n) {
    const auto a = x_via_qbinom(n);
    const auto b = x_via_matchings(n, exec);
    const auto& c = mut[static_cast<std::size_t>(n + 3)];
    routes = routes && a == b && b == c;
    commute = commute && commutation_exponent(c, y1) == 2 * (n + 1) && commutation_exponent(c, y2) == -2 * (n + 2);
  }
  rep.add("x_{n+3}: q-binomial, matching and mutation routes agree" + upto(n_max), routes);
  rep.add("commutation exponents of x_{n+3} with y1, y2" + upto(n_max), commute);
  rep.add("y1 y2 = q^{-2} y2 y1", commutation_exponent(y1, y2) == -4);
  return rep;
}

CheckReport check_level_counts(int n_max) {
  CheckReport rep;
  bool g_ok = true, h_ok = true;
  for (int n = 0; n <= n_max; ++n) {
    auto check = [n](const KroneckerGraph& kg, bool is_h) {
      std::map<std::pair<int, int>, std::size_t> got;
      for (const auto& [k, v] : level_sets(kg)) got[k] = v.size();
      for (int p = 0; p <= n; ++p) {
        for (int r = 0; p + r <= n; ++r) {
          const BigInt want = is_h ? binomial(n - r, p) * binomial(n - p, r) : binomial(n - r, p) * binomial(n + 1 - p, r);
          auto it = got.find({p, r});
          const BigInt have = it == got.end() ? 0 : BigInt(it->second);
          if (want != have) return false;
          if (it != got.end()) got.erase(it);
        }
      }
      // G_n also has the single matching P_min at (0, n+1).
      if (!is_h) {
        auto it = got.find({0, n + 1});
        if (it == got.end() || it->second != 1) return false;
        got.erase(it);
      }
      return got.empty();
    };
    g_ok = g_ok && check(kronecker_G(n), false);
    if (n >= 1) h_ok = h_ok && check(kronecker_H(n, resolved_h_convention()), true);
  }
  rep.add("level set sizes of G_n" + upto(n_max), g_ok);
  rep.add("level set sizes of H_n" + upto(n_max), h_ok);
  return rep;
}

CheckReport check_classical_limits(int n_max) {
  CheckReport rep;
  bool ok = true;
  for (int n = 0; n <= n_max; ++n) {
    const auto cz = classical_x(n);
    ok = ok && specialize_classical(x_via_qbinom(n)) == cz && specialize_classical(x_via_matchings(n)) == cz &&
         classical_matching_x(n) == cz;
  }
  rep.add("q = 1 limits match the classical binomial and matching formulas" + upto(n_max), ok);
  return rep;
}

CheckReport check_bar_invariance(int n_max) {
  CheckReport rep;
  bool ok = true;
  for (int n = 0; n <= n_max; ++n) {
    for (int p = 0; p <= n + 1; ++p) {
      for (int r = 0; r <= n + 1; ++r) {
        const auto c = c_coeff(p, r, n), d = d_coeff(p, r, n);
        ok = ok && bar(c) == c && bar(d) == d;
      }
    }
  }
  rep.add("c_{p,r,n} and d_{p,r,n} are bar-invariant" + upto(n_max), ok);
  return rep;
}

CheckReport check_negative_route(int n_max) {
  CheckReport rep;
  const auto mut = x_negative_via_mutation(n_max);
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) ok = ok && x_negative_via_matchings(n) == mut[static_cast<std::size_t>(n)];
  rep.add("x_{-n}: matching and mutation routes agree for 1 <= n <= " + std::to_string(n_max), ok);
  return rep;
}

CheckReport check_typea(int n, Exec exec) {
  CheckReport rep;
  const std::size_t expect = static_cast<std::size_t>(n * (n + 3) / 2);
  bool unit = true, sets = true, counts = true, snakes = true;
  for (const auto& q : PathQuiver::all(n)) {
    std::set<std::string> arcs;
    for (const auto& d : all_arcs(q)) {
      try {
        arcs.insert(element_key(expand_arc(d)));
      } catch (const InvariantViolation&) {
        unit = false;
      }
      std::set<VertexSubset> from_snake;
      const auto g = build_typea_snake(d);
      for (const auto& m : enumerate_matchings(g, exec)) {
        VertexSubset s = 0;
        for (int w : twist_weights(g, m.twist)) s |= VertexSubset{1} << (w - 1);
        from_snake.insert(s);
      }
      const auto sc = successor_closed_subsets(d);
      snakes = snakes && from_snake == std::set<VertexSubset>(sc.begin(), sc.end()) &&
               count_matchings(g) == sc.size();
    }
    const auto seed = initial_seed(q.exchange_matrix());
    for (const auto& x : seed.cluster) arcs.insert(element_key(x));
    const auto bfs = exchange_graph_bfs(seed, 100000, exec);
    std::set<std::string> found;
    for (const auto& x : bfs.variables) found.insert(element_key(x));
    sets = sets && bfs.complete && found == arcs;
    counts = counts && found.size() == expect;
  }
  const std::string tag = "A_" + std::to_string(n) + ": ";
  rep.add(tag + "arc expansions have all coefficients 1", unit);
  rep.add(tag + "arc expansions and initial variables equal the exchange-graph variables", sets);
  rep.add(tag + std::to_string(expect) + " cluster variables per orientation", counts);
  rep.add(tag + "snake twist sets are the successor-closed subsets", snakes);
  return rep;
}

CheckReport check_stembridge(int n_max, Exec exec) {
  CheckReport rep;
  const auto rows = stembridge_table(n_max, exec);
  bool pass = true, vanish = true;
  for (const auto& r : rows) {
    pass = pass && r.pass;
    if (vanishing_class(r.p, r.r, r.n)) vanish = vanish && r.x_at_minus_one == 0 && r.fixed_count == 0;
  }
  rep.add("X(-1) = #sigma-fixed matchings on " + std::to_string(rows.size()) + " levels" + upto(n_max), pass);
  rep.add("vanishing residue classes give 0" + upto(n_max), vanish);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "seed", "kronecker", "typea", "stembridge"};
  return names;
}

CheckReport run_suite(const std::string& name, int n_max, Exec exec) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw DomainError("unknown suite: " + name);
  }
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const bool all = name == "all";
  CheckReport rep;
  if (all || name == "seed") {
    const int len = std::min(n_max, 6);
    rep.merge(check_quantization(kronecker_btilde(), len, "Kronecker"));
    for (const auto& q : PathQuiver::all(3)) rep.merge(check_quantization(q.exchange_matrix(), len, "A_3 " + q.orientation));
  }
  if (all || name == "kronecker") {
    const int small = std::min(n_max, 6);
    const auto res = resolve_h_convention(small);
    rep.add("H_n convention: exactly one candidate survives for n <= " + std::to_string(small), res.survivors.size() == 1);
    const auto& conv = resolved_h_convention();
    rep.merge(check_kronecker_routes(n_max, exec));
    rep.merge(check_negative_route(std::min(n_max, 8)));
    rep.merge(check_exchange_relations(n_max));
    rep.merge(check_s1(conv));
    rep.merge(check_loop_recursion(n_max));
    rep.merge(check_rs_recursions(n_max, conv));
    const auto tables = coeff_tables(n_max, conv);
    rep.merge(check_coefficient_recursions(tables, n_max));
    rep.merge(check_coefficient_equalities(tables, n_max));
    rep.merge(check_level_counts(n_max));
    rep.merge(check_classical_limits(n_max));
    rep.merge(check_bar_invariance(n_max));
  }
  if (all || name == "typea") {
    for (int n = 1; n <= std::min(n_max, 6); ++n) rep.merge(check_typea(n, exec));
  }
  if (all || name == "stembridge") rep.merge(check_stembridge(n_max, exec));
  return rep;
}

}  // namespace qsnake
