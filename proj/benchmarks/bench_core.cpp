#include <benchmark/benchmark.h>

#include "cgt/cayley.hpp"
#include "cgt/ends.hpp"
#include "cgt/groups.hpp"
#include "cgt/snapshot.hpp"

namespace {

using cgt::groups::GroupModel;

void bm_ball_z2(benchmark::State& state) {
  GroupModel g = GroupModel::free_abelian(2);
  const long radius = state.range(0);
  for (auto _ : state) {
    auto ball = cgt::cayley::ball(g, radius);
    benchmark::DoNotOptimize(ball.size());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_ball_z2)->Arg(20)->Arg(40)->Arg(60);

void bm_ball_f2(benchmark::State& state) {
  GroupModel g = GroupModel::free_group(2);
  const long radius = state.range(0);
  for (auto _ : state) {
    auto ball = cgt::cayley::ball(g, radius);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(bm_ball_f2)->Arg(6)->Arg(9);

void bm_window_metric_z2(benchmark::State& state) {
  GroupModel g = GroupModel::free_abelian(2);
  const long r = state.range(0);
  auto ball = cgt::cayley::ball(g, 2 * r);
  for (auto _ : state) {
    auto window = cgt::cayley::window_metric(ball, r);
    benchmark::DoNotOptimize(window.distance(0, window.size() - 1));
  }
}
BENCHMARK(bm_window_metric_z2)->Arg(5)->Arg(10);

void bm_ends_heisenberg(benchmark::State& state) {
  GroupModel g = GroupModel::heisenberg();
  const long r_max = state.range(0);
  for (auto _ : state) {
    auto report = cgt::ends::count_ends(g, r_max);
    benchmark::DoNotOptimize(report.sequence.size());
  }
}
BENCHMARK(bm_ends_heisenberg)->Arg(2)->Arg(3);

void bm_divergence_z2(benchmark::State& state) {
  GroupModel g = GroupModel::free_abelian(2);
  auto ball = cgt::cayley::ball(g, state.range(0));
  auto snap = cgt::coarse::snapshot_of_ball(ball);
  // x-axis vs y-axis label subsets
  std::vector<int> x_axis, y_axis;
  for (int v = 0; v < ball.size(); ++v) {
    const std::string& label = ball.vertex_label(v);
    if (label.find(",0)") != std::string::npos) x_axis.push_back(v);
    if (label.rfind("(0,", 0) == 0) y_axis.push_back(v);
  }
  cgt::coarse::SubsetFamily family(snap, {x_axis, y_axis}, {"X", "Y"});
  for (auto _ : state) {
    auto report = cgt::coarse::diverge_coarsely(family, {1, 2, 3}, 2);
    benchmark::DoNotOptimize(report.diverges_at_scale);
  }
}
BENCHMARK(bm_divergence_z2)->Arg(30)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
