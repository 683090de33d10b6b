#include "qsnake/kronecker.hpp"

#include "qsnake/errors.hpp"
#include "qsnake/qbinom.hpp"
#include "qsnake/seed.hpp"

#include <set>

namespace qsnake {

IntMatrix kronecker_btilde() { return IntMatrix({{0, 2}, {-2, 0}}); }

const SkewMatrixPtr& kronecker_torus() {
  static const SkewMatrixPtr torus = std::make_shared<const SkewMatrix>(principal_pair(kronecker_btilde()).second);
  return torus;
}

TorusElement kmono(int a0, int a1, int a2, int a3, const QLaurent& c) {
  return TorusElement::monomial(kronecker_torus(), {a0, a1, a2, a3}, c);
}

QLaurent c_coeff(int p, int r, int n) {
  if (p < 0 || r < 0 || n < 0) return {};
  if (p == 0 && r == n + 1) return 1;
  if (p + r > n) return {};
  return qbinom(n - r, p) * qbinom(n + 1 - p, r);
}

QLaurent d_coeff(int p, int r, int n) {
  if (p < 0 || r < 0 || n < 0 || p + r > n) return {};
  return qbinom(n - r, p) * qbinom(n - p, r);
}

TorusElement x_via_qbinom(int n) {
  if (n < 0) throw DomainError("x_via_qbinom: n must be nonnegative");
  TorusElement x = kmono(-n - 1, n + 2, 0, 0);
  for (int p = 0; p <= n; ++p) {
    for (int r = 0; p + r <= n; ++r) x += kmono(2 * p - n - 1, 2 * r - n, n + 1 - r, p, c_coeff(p, r, n));
  }
  return x;
}

std::vector<TorusElement> x_via_mutation(int top) {
  if (top < 2) throw DomainError("x_via_mutation: need top >= 2");
  const QuantumSeed s0 = initial_seed(kronecker_btilde());
  std::vector<TorusElement> xs{mutate(s0, 2).cluster[1], s0.cluster[0], s0.cluster[1]};
  QuantumSeed s = s0;
  int k = 1;
  for (int idx = 3; idx <= top; ++idx) {
    s = mutate(s, k);
    xs.push_back(s.cluster[static_cast<std::size_t>(k - 1)]);
    k = 3 - k;
  }
  return xs;
}

std::vector<TorusElement> x_negative_via_mutation(int m) {
  if (m < 0) throw DomainError("x_negative_via_mutation: m must be nonnegative");
  QuantumSeed s = initial_seed(kronecker_btilde());
  std::vector<TorusElement> xs;
  int k = 2;
  for (int i = 0; i <= m; ++i) {
    s = mutate(s, k);
    xs.push_back(s.cluster[static_cast<std::size_t>(k - 1)]);
    k = 3 - k;
  }
  return xs;
}

TorusElement kronecker_x(int k) {
  if (k == 1) return kmono(1, 0, 0, 0);
  if (k == 2) return kmono(0, 1, 0, 0);
  if (k >= 3) return x_via_qbinom(k - 3);
  return x_negative_via_mutation(-k).back();
}

// ---------------------------------------------------------------------------

KroneckerGraph kronecker_G(int n) {
  KroneckerGraph kg{build_kronecker_G(n), n, false, {}, n + 1, n};
  for (const Tile& t : kg.graph.tiles()) kg.tile_alpha2.push_back(t.face_weight == 1 ? t.label : -t.label);
  return kg;
}

KroneckerGraph kronecker_H(int n, const HConvention& conv) {
  KroneckerGraph kg{build_kronecker_H(n, conv), n, true, {}, n, n};
  for (const Tile& t : kg.graph.tiles()) {
    kg.tile_alpha2.push_back(t.face_weight == 1 ? t.label + conv.weight1_offset : -t.label);
  }
  return kg;
}

KroneckerGraph kronecker_G_negative(int n) {
  KroneckerGraph kg{build_kronecker_G_swapped(n), n, false, {}, n, n + 1};
  for (const Tile& t : kg.graph.tiles()) kg.tile_alpha2.push_back(t.face_weight == 1 ? -t.label : t.label);
  return kg;
}

int alpha2(const KroneckerGraph& kg, TileSet twist) {
  int a = 0;
  for (int t : tile_list(twist)) a += kg.tile_alpha2[static_cast<std::size_t>(t)];
  return a;
}

std::pair<int, int> y_degrees(const KroneckerGraph& kg, TileSet twist) {
  std::pair<int, int> y{0, 0};
  for (int t : tile_list(twist)) {
    if (kg.graph.tiles()[static_cast<std::size_t>(t)].face_weight == 1) ++y.first; else ++y.second;
  }
  return y;
}

Exponent nu(const KroneckerGraph& kg, const Matching& p) {
  const auto wm = weight_monomial(kg.graph, p.edges);
  const auto count = [&wm](int w) {
    auto it = wm.find(w);
    return it == wm.end() ? 0 : it->second;
  };
  const auto [y1, y2] = y_degrees(kg, p.twist);
  return {count(1) - kg.cross_x1, count(2) - kg.cross_x2, y1, y2};
}

TorusElement matching_expansion(const KroneckerGraph& kg, const std::vector<Matching>& ms, Exec exec) {
  std::vector<Exponent> exps(ms.size());
  std::vector<int> alphas(ms.size());
  const long long count = static_cast<long long>(ms.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long i = 0; i < count; ++i) {
    exps[static_cast<std::size_t>(i)] = nu(kg, ms[static_cast<std::size_t>(i)]);
    alphas[static_cast<std::size_t>(i)] = alpha2(kg, ms[static_cast<std::size_t>(i)].twist);
  }
  TorusElement out(kronecker_torus());
  for (std::size_t i = 0; i < ms.size(); ++i) out.add_term(exps[i], QLaurent::monomial(alphas[i]));
  return out;
}

TorusElement matching_expansion(const KroneckerGraph& kg, Exec exec) {
  return matching_expansion(kg, enumerate_matchings(kg.graph, exec), exec);
}

TorusElement x_via_matchings(int n, Exec exec) { return matching_expansion(kronecker_G(n), exec); }

TorusElement x_negative_via_matchings(int n, Exec exec) { return matching_expansion(kronecker_G_negative(n), exec); }

TorusElement s_elem(int n, const HConvention& conv, Exec exec) { return matching_expansion(kronecker_H(n, conv), exec); }

TorusElement s_elem(int n) { return s_elem(n, resolved_h_convention()); }

std::map<std::pair<int, int>, std::vector<Matching>> level_sets(const KroneckerGraph& kg) {
  std::map<std::pair<int, int>, std::vector<Matching>> out;
  for (const Matching& m : enumerate_matchings(kg.graph)) {
    const auto [y1, y2] = y_degrees(kg, m.twist);
    const int r = (kg.is_h ? kg.n : kg.n + 1) - y1;
    out[{y2, r}].push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------

QLaurent CoeffTables::get(const CoeffFamily& f, int p, int r, int n) {
  auto it = f.find({p, r, n});
  return it == f.end() ? QLaurent() : it->second;
}

namespace {

void collect_levels(const KroneckerGraph& kg, CoeffFamily& out) {
  for (const auto& [pr, ms] : level_sets(kg)) {
    QLaurent sum;
    for (const Matching& m : ms) sum += QLaurent::monomial(alpha2(kg, m.twist));
    if (!sum.is_zero()) out[{pr.first, pr.second, kg.n}] = sum;
  }
}

}  // namespace

CoeffTables coeff_tables(int n_max, const HConvention& conv) {
  CoeffTables t;
  for (int n = 0; n <= n_max; ++n) {
    for (int p = 0; p <= n + 1; ++p) {
      for (int r = 0; r <= n + 1; ++r) {
        if (auto c = c_coeff(p, r, n); !c.is_zero()) t.c[{p, r, n}] = c;
        if (auto d = d_coeff(p, r, n); !d.is_zero()) t.d[{p, r, n}] = d;
      }
    }
    collect_levels(kronecker_G(n), t.ctilde);
    collect_levels(kronecker_H(n, conv), t.dtilde);
  }
  return t;
}

CoeffTables coeff_tables(int n_max) { return coeff_tables(n_max, resolved_h_convention()); }

bool CheckReport::pass() const {
  for (const auto& [what, ok] : lines) {
    if (!ok) return false;
  }
  return true;
}

void CheckReport::merge(const CheckReport& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

namespace {

// q^{(n+1-r)/2} C(p,r,n) = q^{(n+1)/2} D(p,r,n) + q^{p/2} C(p,r-1,n-1)
bool first_recursion(const CoeffFamily& c, const CoeffFamily& d, int p, int r, int n) {
  const QLaurent lhs = CoeffTables::get(c, p, r, n).shifted(n + 1 - r);
  const QLaurent rhs = CoeffTables::get(d, p, r, n).shifted(n + 1) + CoeffTables::get(c, p, r - 1, n - 1).shifted(p);
  return lhs == rhs;
}

// q^{-p/2} D(p,r,n) = C(p,r,n-1) + q^{-(n-r)/2} D(p-1,r,n-1)
bool second_recursion(const CoeffFamily& c, const CoeffFamily& d, int p, int r, int n) {
  const QLaurent lhs = CoeffTables::get(d, p, r, n).shifted(-p);
  const QLaurent rhs = CoeffTables::get(c, p, r, n - 1) + CoeffTables::get(d, p - 1, r, n - 1).shifted(-(n - r));
  return lhs == rhs;
}

std::string upto(int n_max) { return " for n <= " + std::to_string(n_max); }

}  // namespace

CheckReport check_coefficient_recursions(const CoeffTables& t, int n_max) {
  bool a = true, b = true, c = true, d = true;
  for (int n = 1; n <= n_max; ++n) {
    for (int p = -1; p <= n + 2; ++p) {
      for (int r = -1; r <= n + 2; ++r) {
        a = a && first_recursion(t.ctilde, t.dtilde, p, r, n);
        b = b && second_recursion(t.ctilde, t.dtilde, p, r, n);
        c = c && first_recursion(t.c, t.d, p, r, n);
        d = d && second_recursion(t.c, t.d, p, r, n);
      }
    }
  }
  CheckReport rep;
  rep.add("coefficient recursion (a) on level-set coefficients" + upto(n_max), a);
  rep.add("coefficient recursion (b) on level-set coefficients" + upto(n_max), b);
  rep.add("coefficient recursion (c) on binomial coefficients" + upto(n_max), c);
  rep.add("coefficient recursion (d) on binomial coefficients" + upto(n_max), d);
  return rep;
}

CheckReport check_coefficient_equalities(const CoeffTables& t, int n_max) {
  auto same = [n_max](const CoeffFamily& x, const CoeffFamily& y) {
    std::set<CoeffKey> keys;
    for (const auto& [k, v] : x) keys.insert(k);
    for (const auto& [k, v] : y) keys.insert(k);
    for (const auto& k : keys) {
      if (std::get<2>(k) > n_max) continue;
      if (!(CoeffTables::get(x, std::get<0>(k), std::get<1>(k), std::get<2>(k)) ==
            CoeffTables::get(y, std::get<0>(k), std::get<1>(k), std::get<2>(k)))) {
        return false;
      }
    }
    return true;
  };
  CheckReport rep;
  rep.add("c = level sums over G_n" + upto(n_max), same(t.c, t.ctilde));
  rep.add("d = level sums over H_n" + upto(n_max), same(t.d, t.dtilde));
  return rep;
}

namespace {

TorusElement s1_explicit() { return kmono(-1, 1, 0, 0) + kmono(-1, -1, 1, 0) + kmono(1, -1, 1, 1); }

// x_0 x_3 - q M[1,1,0,1]. Read left to right, q^{1/2} x_1 x_2 y_2 is only
// M[1,1,0,1]; the monomial has to be ordered as y_2 x_1 x_2 to give q M[1,1,0,1].
TorusElement s1_from_cluster() { return kronecker_x(0) * kronecker_x(3) - kmono(1, 1, 0, 1, QLaurent::monomial(2)); }

}  // namespace

CheckReport check_loop_recursion(int n_max) {
  const TorusElement s1 = s1_explicit();
  const TorusElement y1y2 = kmono(0, 0, 1, 0) * kmono(0, 0, 0, 1);
  bool ok = true;
  for (int n = 2; n <= n_max; ++n) {
    const TorusElement lhs = kronecker_x(n) * s1;
    const TorusElement rhs = kronecker_x(n + 1) + QLaurent::monomial(2) * (kronecker_x(n - 1) * y1y2);
    ok = ok && lhs == rhs;
  }
  CheckReport rep;
  rep.add("x_n s_1 = x_{n+1} + q x_{n-1} y_1 y_2" + upto(n_max), ok);
  return rep;
}

CheckReport check_rs_recursions(int n_max, const HConvention& conv) {
  const TorusElement x1 = kmono(1, 0, 0, 0), x2 = kmono(0, 1, 0, 0), y1 = kmono(0, 0, 1, 0);
  const TorusElement m1011 = kmono(1, 0, 1, 1);
  std::vector<TorusElement> r, s;
  for (int n = 0; n <= n_max; ++n) {
    r.push_back(x_via_matchings(n));
    s.push_back(s_elem(n, conv));
  }
  bool a = true, b = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    a = a && r[i] * x1 == QLaurent::monomial(1) * (s[i] * y1) + r[i - 1] * x2;
    b = b && x2 * s[i] == r[i - 1] + QLaurent::monomial(-1) * (m1011 * s[i - 1]);
  }
  CheckReport rep;
  rep.add("r_n x_1 = q^{1/2} s_n y_1 + r_{n-1} x_2" + upto(n_max), a);
  rep.add("x_2 s_n = r_{n-1} + q^{-1/2} M[1,0,1,1] s_{n-1}" + upto(n_max), b);
  return rep;
}

CheckReport check_s1(const HConvention& conv) {
  CheckReport rep;
  const TorusElement s1 = s_elem(1, conv);
  rep.add("s_1 = M[-1,1,0,0] + M[-1,-1,1,0] + M[1,-1,1,1]", s1 == s1_explicit());
  rep.add("x_0 = M[2,-1,0,1] + M[0,-1,0,0]", kronecker_x(0) == kmono(2, -1, 0, 1) + kmono(0, -1, 0, 0));
  rep.add("s_1 = x_0 x_3 - q M[1,1,0,1]", s1 == s1_from_cluster());
  const TorusElement x1 = kmono(1, 0, 0, 0), x2 = kmono(0, 1, 0, 0), y2 = kmono(0, 0, 0, 1);
  rep.add("s_1 = x_0 x_3 - q^{1/2} y_2 x_1 x_2",
          s1 == kronecker_x(0) * kronecker_x(3) - QLaurent::monomial(1) * (y2 * x1 * x2));
  return rep;
}

CheckReport check_exchange_relations(int n_max) {
  bool first = true, second = true;
  for (int n = 0; n <= n_max; ++n) {
    const TorusElement a = kronecker_x(n + 2), b = kronecker_x(n + 3), c = kronecker_x(n + 4);
    TorusElement ymon = TorusElement::identity(kronecker_torus());
    for (int i = 0; i < n + 2; ++i) ymon = ymon * kmono(0, 0, 1, 0);
    for (int i = 0; i < n + 1; ++i) ymon = ymon * kmono(0, 0, 0, 1);
    const int e = 2 * (n + 2) * (n + 1);
    first = first && a * c == b * b + QLaurent::monomial(e - 1) * ymon;
    second = second && c * a == b * b + QLaurent::monomial(e + 1) * ymon;
  }
  CheckReport rep;
  rep.add("x_{n+2} x_{n+4} = x_{n+3}^2 + q^{-1/2+(n+2)(n+1)} y_1^{n+2} y_2^{n+1}" + upto(n_max), first);
  rep.add("x_{n+4} x_{n+2} = x_{n+3}^2 + q^{1/2+(n+2)(n+1)} y_1^{n+2} y_2^{n+1}" + upto(n_max), second);
  return rep;
}

HResolution resolve_h_convention(int n_max) {
  HResolution res;
  const CheckReport loop = check_loop_recursion(n_max);
  for (const HConvention& conv : h_convention_candidates()) {
    HCandidateResult cand{conv, {}};
    const KroneckerGraph h1 = kronecker_H(1, conv);
    bool zero = true;
    for (const Matching& m : enumerate_matchings(h1.graph)) zero = zero && alpha2(h1, m.twist) == 0;
    cand.report.add("alpha vanishes on all matchings of H_1", zero);
    cand.report.merge(check_s1(conv));
    const CoeffTables t = coeff_tables(n_max, conv);
    cand.report.merge(check_coefficient_equalities(t, n_max));
    cand.report.merge(check_coefficient_recursions(t, n_max));
    cand.report.merge(check_rs_recursions(n_max, conv));
    cand.report.merge(loop);
    if (cand.report.pass()) res.survivors.push_back(conv);
    res.candidates.push_back(std::move(cand));
  }
  return res;
}

const HConvention& resolved_h_convention() {
  static const HConvention conv = [] {
    const HResolution res = resolve_h_convention(6);
    if (res.survivors.size() != 1) {
      throw InvariantViolation("H_n convention is not uniquely determined: " + std::to_string(res.survivors.size()) +
                               " candidates survive");
    }
    return res.survivors.front();
  }();
  return conv;
}

// ---------------------------------------------------------------------------

ClassicalLaurent classical_x(int n) {
  ClassicalLaurent x = ClassicalLaurent::monomial({-n - 1, n + 2, 0, 0});
  for (int p = 0; p <= n; ++p) {
    for (int r = 0; p + r <= n; ++r) {
      x.add_term({2 * p - n - 1, 2 * r - n, n + 1 - r, p}, binomial(n - r, p) * binomial(n + 1 - p, r));
    }
  }
  return x;
}

ClassicalLaurent classical_matching_x(int n) {
  const SnakeGraph g = build_kronecker_G(n);
  ClassicalLaurent x(4);
  for (const Matching& m : enumerate_matchings(g)) {
    Exponent e{-(n + 1), -n, 0, 0};
    for (int id : edge_list(m.edges)) {
      const int w = g.edges()[static_cast<std::size_t>(id)].weight;
      if (w != 0) ++e[static_cast<std::size_t>(w - 1)];
    }
    for (int w : twist_weights(g, m.twist)) ++e[static_cast<std::size_t>(1 + w)];
    x.add_term(e, 1);
  }
  return x;
}

}  // namespace qsnake
