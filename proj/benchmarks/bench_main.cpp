#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hyptube/arrangement.hpp"
#include "hyptube/bounds.hpp"

namespace {

using namespace hyptube;

const double kS3 = std::sqrt(3.0);

GroupPresentation schottky() {
  GroupPresentation g;
  g.add_generator('a', Isometry::from_entries(2.0, kS3, kS3, 2.0));
  g.add_generator('b', Isometry::from_entries(2.0, Complex(0, kS3), Complex(0, -kS3), 2.0));
  return g;
}

std::vector<CircleOnSphere> chain(double r) {
  std::vector<CircleOnSphere> out;
  for (int k = 0; k < 3; ++k) {
    out.push_back(CircleOnSphere::circle(std::polar(1.0, 2.0 * std::numbers::pi * k / 3), r));
  }
  return out;
}

void BM_Enumerate(benchmark::State& state) {
  const GroupPresentation g = schottky();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(g, n));
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_TripleSeparates(benchmark::State& state) {
  const auto cs = chain(0.9);
  const IdealPoint p = IdealPoint::finite(0.0), q = IdealPoint::infinity();
  for (auto _ : state) benchmark::DoNotOptimize(triple_separates(cs[0], cs[1], cs[2], p, q));
}
BENCHMARK(BM_TripleSeparates)->Unit(benchmark::kMicrosecond);

void BM_FloodFill(benchmark::State& state) {
  const auto cs = chain(0.9);
  const IdealPoint p = IdealPoint::finite(0.0), q = IdealPoint::infinity();
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flood_fill_oracle(cs, p, q, res, 1));
}
BENCHMARK(BM_FloodFill)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const GroupPresentation g = schottky();
  ReportParams params;
  params.max_word_length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hypothesis_report(g, Word({1}), params));
}
BENCHMARK(BM_Report)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
