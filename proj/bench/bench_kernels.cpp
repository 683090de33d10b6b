#include "qsnake/kronecker.hpp"
#include "qsnake/lattice.hpp"
#include "qsnake/seed.hpp"
#include "qsnake/stembridge.hpp"
#include "qsnake/typea.hpp"

#include <benchmark/benchmark.h>

using namespace qsnake;

static Exec exec_arg(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

static void BM_TwistSets(benchmark::State& state) {
  const auto g = build_kronecker_G(static_cast<int>(state.range(0)));
  std::vector<EdgeSet> ps;
  for (const auto& m : enumerate_matchings(g, Exec::serial)) ps.push_back(m.edges);
  for (auto _ : state) benchmark::DoNotOptimize(twist_sets(g, ps, exec_arg(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(ps.size()));
}
BENCHMARK(BM_TwistSets)->ArgsProduct({{6, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_MatchingExpansion(benchmark::State& state) {
  const auto kg = kronecker_G(static_cast<int>(state.range(0)));
  const auto ms = enumerate_matchings(kg.graph, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(matching_expansion(kg, ms, exec_arg(state)));
}
BENCHMARK(BM_MatchingExpansion)->ArgsProduct({{6, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_Stembridge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stembridge_table(n, exec_arg(state)));
}
BENCHMARK(BM_Stembridge)->ArgsProduct({{8}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_ExchangeGraph(benchmark::State& state) {
  const auto b = PathQuiver::parse(std::string(static_cast<std::size_t>(state.range(0) - 1), '>')).exchange_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(exchange_graph_bfs(initial_seed(b), 100000, exec_arg(state)));
}
BENCHMARK(BM_ExchangeGraph)->ArgsProduct({{5}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_LatticeCheck(benchmark::State& state) {
  const auto g = build_kronecker_G(static_cast<int>(state.range(0)));
  const auto lat = lattice_of(g, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(check_lattice(g, lat, exec_arg(state)));
}
BENCHMARK(BM_LatticeCheck)->ArgsProduct({{5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
