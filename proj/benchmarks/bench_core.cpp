#include <benchmark/benchmark.h>

#include "affsl2/grade_space.hpp"
#include "affsl2/qseries.hpp"

using namespace affsl2;

static void BM_enumerate_degree(benchmark::State& state) {
  int d = -static_cast<int>(state.range(0));
  for (auto _ : state) {
    int count = 0;
    enumerate_partitions(Alphabet::BStrictNeg, d, {},
                         [&count](const ColoredPartition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_degree)->Arg(6)->Arg(8)->Arg(10);

static void BM_cmp(benchmark::State& state) {
  auto a = parse_partition("y(-3) x(-2)^2 y(-1)^3");
  auto b = parse_partition("y(-3) x(-2)^2 h(-1) y(-1)^2");
  for (auto _ : state) benchmark::DoNotOptimize(cmp(a, b));
}
BENCHMARK(BM_cmp);

static void BM_straighten(benchmark::State& state) {
  HighestWeight hw = HighestWeight::verma(1, 1);
  auto pi = parse_partition("y(-3) h(-2) x(-1)^2");
  ModuleVector v = ModuleVector::basis_vector(hw, pi);
  for (auto _ : state) {
    ModuleVector r = act_part(X(0), act_part(Y(1), v));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_straighten);

static void BM_r_apply(benchmark::State& state) {
  HighestWeight hw = HighestWeight::verma(2, 0);
  ModuleVector vac = ModuleVector::vacuum(hw);
  for (auto _ : state) {
    ModuleVector r = r_apply({0, -6}, vac);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_r_apply);

static void BM_m1_grade(benchmark::State& state) {
  HighestWeight hw = HighestWeight::verma(1, 0);
  int d = -static_cast<int>(state.range(0));
  for (auto _ : state) {
    GradeSpace g = m1_grade(hw, d, 0);
    benchmark::DoNotOptimize(g.rank);
  }
}
BENCHMARK(BM_m1_grade)->Arg(3)->Arg(4)->Arg(5);

static void BM_weyl_denominator(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_denominator(1, 1, N));
}
BENCHMARK(BM_weyl_denominator)->Arg(200)->Arg(400);

static void BM_qseries_mul(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  QSeries f = P_product(1, 1, N), g = P_product(1, 2, N);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_qseries_mul)->Arg(200)->Arg(400);
