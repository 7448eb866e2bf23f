#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dcq/ball_clique.hpp"
#include "dcq/conflict_graph.hpp"
#include "dcq/generate.hpp"
#include "dcq/kradii.hpp"
#include "dcq/oracle.hpp"
#include "dcq/range_tables.hpp"

namespace {

dcq::DiskInstance disks(std::size_t n, std::size_t k, long extent) {
  dcq::DiskGenOptions o;
  o.n = n;
  o.k = k;
  o.seed = 42;
  o.extent = dcq::Scalar(extent);
  o.decimals = 2;
  return dcq::generate_disks(o);
}

void BM_KradiiSlab(benchmark::State& state) {
  const auto inst = disks(state.range(0), state.range(1), 5);
  dcq::SearchStats stats;
  for (auto _ : state) {
    auto res = dcq::max_clique_kradii(inst, {}, &stats);
    benchmark::DoNotOptimize(res);
  }
  state.counters["guesses"] = static_cast<double>(stats.guesses_solved);
}
BENCHMARK(BM_KradiiSlab)
    ->ArgsProduct({{10, 20, 40, 80}, {1}})
    ->ArgsProduct({{10, 20, 30}, {2}})
    ->Args({12, 3})
    ->Unit(benchmark::kMillisecond);

void BM_KradiiOracle(benchmark::State& state) {
  const auto inst = disks(state.range(0), state.range(1), 5);
  const auto graph = dcq::intersection_graph(inst);
  for (auto _ : state) {
    auto ids = dcq::bron_kerbosch_max_clique(graph);
    benchmark::DoNotOptimize(ids);
  }
}
BENCHMARK(BM_KradiiOracle)->ArgsProduct({{10, 20, 40, 60}, {1}})->Unit(benchmark::kMillisecond);

void BM_BallsParallel(benchmark::State& state) {
  dcq::BallGenOptions o;
  o.n = state.range(0);
  o.planes = 2;
  o.k = 1;
  o.seed = 42;
  const auto inst = dcq::generate_balls(o);
  for (auto _ : state) {
    auto res = dcq::max_clique_balls_parallel(inst);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BallsParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BallsPerp(benchmark::State& state) {
  dcq::BallGenOptions o;
  o.n = state.range(0);
  o.planes = 2;
  o.k = 1;
  o.seed = 42;
  o.kind = dcq::PlaneKind::PerpToXZ;
  const auto inst = dcq::generate_balls(o);
  for (auto _ : state) {
    auto res = dcq::max_clique_balls_perp(inst);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BallsPerp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RangeBuild(benchmark::State& state) {
  dcq::DiskGenOptions o;
  o.n = state.range(0);
  o.seed = 42;
  o.extent = dcq::Scalar(3);
  o.decimals = 2;
  o.general_position = true;
  const dcq::UnitInstance inst(dcq::generate_disks(o));
  for (auto _ : state) {
    auto m = dcq::build_m_table(inst, dcq::build_s_table(inst));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_RangeBuild)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

// One insert/delete pair on a dense 40+40 conflict graph, against a rebuild.
struct MatchingFixture {
  std::vector<std::vector<bool>> conflict;
  dcq::ConflictGraph graph;
  std::vector<dcq::VertexId> left;
  std::vector<dcq::VertexId> right;

  MatchingFixture() : conflict(80, std::vector<bool>(80, false)) {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.1);
    for (dcq::VertexId u = 0; u < 40; ++u) {
      left.push_back(u);
      right.push_back(u + 40);
      for (dcq::VertexId v = 40; v < 80; ++v) conflict[u][v] = conflict[v][u] = coin(rng);
    }
    graph = build([&](dcq::VertexId a, dcq::VertexId b) { return !conflict[a][b]; });
    graph.max_matching();
  }

  template <typename Pred>
  dcq::ConflictGraph build(Pred pred) {
    return dcq::build_conflict_graph(left, right, pred);
  }
};

void BM_MatchingIncremental(benchmark::State& state) {
  MatchingFixture fx;
  dcq::VertexId v = 0;
  for (auto _ : state) {
    std::vector<dcq::VertexId> nbrs;
    for (dcq::VertexId u : fx.right) {
      if (fx.conflict[v][u]) nbrs.push_back(u);
    }
    fx.graph.delete_vertex(v);
    fx.graph.insert_vertex(v, dcq::Part::Left, nbrs);
    v = (v + 1) % 40;
  }
}
BENCHMARK(BM_MatchingIncremental);

void BM_MatchingRebuild(benchmark::State& state) {
  MatchingFixture fx;
  for (auto _ : state) {
    auto g = fx.build([&](dcq::VertexId a, dcq::VertexId b) { return !fx.conflict[a][b]; });
    benchmark::DoNotOptimize(g.max_matching());
  }
}
BENCHMARK(BM_MatchingRebuild);

}  // namespace

BENCHMARK_MAIN();
