#include <benchmark/benchmark.h>

#include <cmath>

#include "moreau/gauge2d.hpp"
#include "moreau/oracle.hpp"
#include "moreau/prox.hpp"

namespace {

moreau::PiecewiseCubic three_piece() {
  return moreau::PiecewiseCubic::validate(
      {{0, 0, -5, -2}, {0, 1, -2, 0}, {1, 0, 0, 0}}, {-1.0, 0.0});
}

void BM_prox_closed_form(benchmark::State& state) {
  moreau::PiecewiseCubic f = three_piece();
  auto part = moreau::partition(f, {1.0});
  double x = -9.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(moreau::prox(f, part, {1.0}, x).envelope);
    x += 0.01;
    if (x > 6.0) x = -9.0;
  }
}
BENCHMARK(BM_prox_closed_form);

void BM_prox_with_partition_build(benchmark::State& state) {
  moreau::PiecewiseCubic f = three_piece();
  double x = -9.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(moreau::prox(f, {1.0}, x).envelope);
    x += 0.01;
    if (x > 6.0) x = -9.0;
  }
}
BENCHMARK(BM_prox_with_partition_build);

void BM_prox_oracle_1d(benchmark::State& state) {
  moreau::PiecewiseCubic f = three_piece();
  double x = -9.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(moreau::prox_oracle_1d(f, {1.0}, x).envelope);
    x += 0.01;
    if (x > 6.0) x = -9.0;
  }
}
BENCHMARK(BM_prox_oracle_1d);

void BM_smooth_max_closed_form(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    moreau::Vec2 p{2.0 * std::cos(t), 2.0 * std::sin(t)};
    benchmark::DoNotOptimize(moreau::smooth_max(1.0, p).h);
    t += 0.01;
  }
}
BENCHMARK(BM_smooth_max_closed_form);

void BM_envelope_oracle_2d(benchmark::State& state) {
  auto f2 = [](moreau::Vec2 v) {
    double m = std::max(std::fabs(v.x), std::fabs(v.y));
    return m * m;
  };
  double t = 0.0;
  for (auto _ : state) {
    moreau::Vec2 p{2.0 * std::cos(t), 2.0 * std::sin(t)};
    benchmark::DoNotOptimize(moreau::envelope_oracle_2d(f2, {1.0}, p).value);
    t += 0.1;
  }
}
BENCHMARK(BM_envelope_oracle_2d);

void BM_unit_circle_360(benchmark::State& state) {
  moreau::SmoothedGauge sg(moreau::Gauge2D::l1_norm(), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moreau::unit_circle(sg, 360));
  }
}
BENCHMARK(BM_unit_circle_360);

}  // namespace

BENCHMARK_MAIN();
