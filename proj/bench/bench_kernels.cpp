// OpenMP kernels against their serial reference implementations.
#include "isingtp/corpus.hpp"
#include "isingtp/directed.hpp"
#include "isingtp/even_subgraphs.hpp"
#include "isingtp/flows.hpp"
#include "isingtp/matrices.hpp"
#include "isingtp/minors.hpp"
#include "isingtp/transfer_matrix.hpp"

#include <benchmark/benchmark.h>

using namespace isingtp;

namespace {

const PlanarGraph& grid3() {
  static const PlanarGraph g = grid_graph(3, 3, mixed_weights(12));
  return g;
}

const PlanarGraph& wheel() {
  static const PlanarGraph g = wheel_graph(5, mixed_weights(8));
  return g;
}

void flow_table(benchmark::State& st, bool parallel) {
  DirectedModification d(st.range(0) ? grid3() : wheel());
  FlowSearchOptions opts;
  opts.max_sources = 2;
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? z_aflow_table(d, opts) : z_aflow_table_serial(d, opts));
}
void BM_FlowTableParallel(benchmark::State& st) { flow_table(st, true); }
void BM_FlowTableSerial(benchmark::State& st) { flow_table(st, false); }
BENCHMARK(BM_FlowTableParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlowTableSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void even_poly(benchmark::State& st, bool parallel) {
  PlanarGraph g = grid_graph(static_cast<int>(st.range(0)), 5, uniform_weights(static_cast<int>(st.range(0)) * 4 + (static_cast<int>(st.range(0)) - 1) * 5, Rational(2, 5)));
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? even_polynomial(g, {0, 4}) : even_polynomial_serial(g, {0, 4}));
}
void BM_EvenPolynomialParallel(benchmark::State& st) { even_poly(st, true); }
void BM_EvenPolynomialSerial(benchmark::State& st) { even_poly(st, false); }
BENCHMARK(BM_EvenPolynomialParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvenPolynomialSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void minors(benchmark::State& st, bool parallel) {
  PlanarGraph g = grid_graph(4, 5, mixed_weights(31));
  auto corr = boundary_correlations(g);
  // bottom row left to right, top row
  CorrelationMatrix m = build_M(g, {0, 1, 2, 3, 4}, {15, 16, 17, 18, 19}, corr);
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? all_minors_nonneg(m) : all_minors_nonneg_serial(m));
}
void BM_MinorsParallel(benchmark::State& st) { minors(st, true); }
void BM_MinorsSerial(benchmark::State& st) { minors(st, false); }
BENCHMARK(BM_MinorsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsSerial)->Unit(benchmark::kMillisecond);

std::vector<std::pair<Site, Site>> tm_pairs(int n) {
  std::vector<Site> pts{{0, 2}, {0, n - 3}, {n - 1, n - 3}, {n - 1, 2}, {3, 0}, {n - 4, n - 1}};
  std::vector<std::pair<Site, Site>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.emplace_back(pts[i], pts[j]);
  return out;
}

void transfer(benchmark::State& st, bool parallel) {
  const int n = static_cast<int>(st.range(0));
  auto pairs = tm_pairs(n);
  for (auto _ : st)
    benchmark::DoNotOptimize(parallel ? tm_boundary_correlations(n, n, pairs, 0.4142135623730951)
                                      : tm_boundary_correlations_serial(n, n, pairs, 0.4142135623730951));
}
void BM_TransferParallel(benchmark::State& st) { transfer(st, true); }
void BM_TransferSerial(benchmark::State& st) { transfer(st, false); }
BENCHMARK(BM_TransferParallel)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransferSerial)->Arg(11)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
