// qcluster: command-line front end for the qsnake library.

#include "qsnake/errors.hpp"
#include "qsnake/json_io.hpp"
#include "qsnake/kronecker.hpp"
#include "qsnake/lattice.hpp"
#include "qsnake/stembridge.hpp"
#include "qsnake/suites.hpp"
#include "qsnake/typea.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace qsnake;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct Options {
  bool serial = false;
  int n = 0;
  int n_max = 6;
  std::string route = "qbinom";
  bool all_routes = false;
  std::string orient;
  std::string interval;
  std::string suite = "all";
  std::string family = "c";
};

Exec exec_of(const Options& o) { return o.serial ? Exec::serial : Exec::parallel; }

TorusElement kronecker_route(const std::string& route, int n, Exec exec) {
  if (route == "qbinom") return x_via_qbinom(n);
  if (route == "matchings") return x_via_matchings(n, exec);
  return x_via_mutation(n + 3).back();
}

int cmd_expand_kronecker(const Options& o) {
  if (!o.all_routes) {
    std::cout << to_json(kronecker_route(o.route, o.n, exec_of(o))).dump(2) << "\n";
    return 0;
  }
  json out;
  out["n"] = o.n;
  bool equal = true;
  TorusElement first;
  bool have_first = false;
  for (const char* r : {"qbinom", "matchings", "mutation"}) {
    const auto x = kronecker_route(r, o.n, exec_of(o));
    out["routes"][r] = to_json(x);
    if (have_first) equal = equal && x == first;
    first = x;
    have_first = true;
  }
  out["equal"] = equal;
  std::cout << out.dump(2) << "\n";
  if (!equal) std::cerr << "qcluster: routes disagree for n = " << o.n << "\n";
  return equal ? 0 : 1;
}

int cmd_expand_typea(const Options& o) {
  const auto q = PathQuiver::parse(o.orient);
  const auto d = ArcDatum::parse(q, o.interval);
  std::cout << to_json(expand_arc(d)).dump(2) << "\n";
  return 0;
}

int cmd_lattice(const SnakeGraph& g, const std::string& name, Exec exec) {
  const auto lat = build_lattice(g, exec);
  std::cout << to_dot(g, lat, name);
  return 0;
}

int cmd_verify(const Options& o) {
  const auto rep = run_suite(o.suite, o.n_max, exec_of(o));
  for (const auto& [what, ok] : rep.lines) std::cout << (ok ? "PASS  " : "FAIL  ") << what << "\n";
  std::cout << (rep.pass() ? "all checks passed" : "some checks failed") << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_table(const Options& o) {
  const auto t = coeff_tables(o.n_max);
  const CoeffFamily& f = o.family == "c" ? t.c : o.family == "d" ? t.d : o.family == "ctilde" ? t.ctilde : t.dtilde;
  json entries = json::array();
  for (const auto& [key, v] : f) {
    const auto& [p, r, n] = key;
    entries.push_back({{"p", p}, {"r", r}, {"n", n}, {"coeff", to_json(v)}});
  }
  json out{{"family", o.family}, {"n_max", o.n_max}, {"entries", entries}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_stembridge(const Options& o) {
  const auto rows = stembridge_table(o.n_max, exec_of(o));
  std::cout << stembridge_csv(rows);
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.pass;
  return pass ? 0 : 1;
}

int cmd_bps(const Options& o) {
  std::cout << to_json(s_elem(o.n)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact expansions of type-A and Kronecker quantum cluster variables"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--serial", o.serial, "Use the serial kernels");

  auto* expand = app.add_subcommand("expand", "Expand a cluster variable as torus JSON");
  expand->require_subcommand(1);
  auto* ek = expand->add_subcommand("kronecker", "x_{n+3} of the Kronecker quiver");
  ek->add_option("--n", o.n, "Index n >= 0")->required()->check(CLI::NonNegativeNumber);
  ek->add_option("--route", o.route, "Computation route")->check(CLI::IsMember({"qbinom", "matchings", "mutation"}));
  ek->add_flag("--all-routes", o.all_routes, "Emit every route and whether they agree");
  auto* et = expand->add_subcommand("typea", "Arc of a type-A quiver");
  et->add_option("--orient", o.orient, "Orientation string over {<,>}")->required();
  et->add_option("--interval", o.interval, "Interval a..b")->required();

  auto* lattice = app.add_subcommand("lattice", "Lattice of perfect matchings as DOT");
  lattice->require_subcommand(1);
  auto* lg = lattice->add_subcommand("kronecker-G", "The graph G_n");
  lg->add_option("--n", o.n, "Index n >= 0")->required()->check(CLI::Range(0, 12));
  auto* ld = lattice->add_subcommand("demo-figure2", "Five-tile demo graph with 11 matchings");

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(1, 12));

  auto* table = app.add_subcommand("table", "Coefficient table as JSON");
  table->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(1, 12));
  table->add_option("--family", o.family, "c, d, ctilde or dtilde")->check(CLI::IsMember({"c", "d", "ctilde", "dtilde"}));

  auto* stem = app.add_subcommand("stembridge", "q = -1 table as CSV");
  stem->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(0, 12));

  auto* bps = app.add_subcommand("bps", "s_n over H_n as torus JSON");
  bps->add_option("--n", o.n, "Index 1 <= n <= 12")->required()->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (ek->parsed()) return cmd_expand_kronecker(o);
    if (et->parsed()) return cmd_expand_typea(o);
    if (lg->parsed()) return cmd_lattice(build_kronecker_G(o.n), "G" + std::to_string(o.n), exec_of(o));
    if (ld->parsed()) return cmd_lattice(build_demo_snake(), "demo", exec_of(o));
    if (verify->parsed()) return cmd_verify(o);
    if (table->parsed()) return cmd_table(o);
    if (stem->parsed()) return cmd_stembridge(o);
    if (bps->parsed()) return cmd_bps(o);
  } catch (const DomainError& e) {
    std::cerr << "qcluster: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcluster: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
