#include <benchmark/benchmark.h>

#include "icgm/problem_io.hpp"

namespace {

using namespace icgm;

void BM_ExpLogRoundTrip(benchmark::State& state) {
  const SpherePoint p(Vec3(0.2, -0.5, 0.8));
  const TangentVector v(p, Vec3(0.3, 0.4, 0.0));
  for (auto _ : state) {
    const SpherePoint q = exp_map(p, v);
    benchmark::DoNotOptimize(log_map(p, q));
  }
}
BENCHMARK(BM_ExpLogRoundTrip);

void BM_ParallelTransport(benchmark::State& state) {
  const SpherePoint p(Vec3(0, 0, 1));
  const SpherePoint q(Vec3(1, 0.2, 0.1));
  const TangentVector v(p, Vec3(0.3, 0.4, 0.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel_transport(p, q, v));
  }
}
BENCHMARK(BM_ParallelTransport);

void BM_OrientedDistance(benchmark::State& state) {
  const SectorCone c = make_cone(Vec2(1, 0.3), Vec2(-0.2, 1));
  const Vec2 y(0.7, -1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oriented_distance(c, y));
  }
}
BENCHMARK(BM_OrientedDistance);

void BM_SolveSubproblem(benchmark::State& state) {
  const Instance inst = make_instance(builtin_problem("rotated_cone_triangle"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_subproblem(inst.objective, inst.cone, inst.polygon, inst.start));
  }
}
BENCHMARK(BM_SolveSubproblem);

void BM_FullRunLinearSquare(benchmark::State& state) {
  const Instance inst = make_instance(builtin_problem("linear_square"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        icgm_run(inst.objective, inst.cone, inst.polygon, inst.start, inst.params));
  }
}
BENCHMARK(BM_FullRunLinearSquare);

void BM_FullRunLogmapFar(benchmark::State& state) {
  const Instance inst = make_instance(builtin_problem("logmap_far"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        icgm_run(inst.objective, inst.cone, inst.polygon, inst.start, inst.params));
  }
}
BENCHMARK(BM_FullRunLogmapFar);

}  // namespace

BENCHMARK_MAIN();
