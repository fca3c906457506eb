#include <benchmark/benchmark.h>

#include "su2ent/angular_momentum.hpp"
#include "su2ent/criteria.hpp"
#include "su2ent/partial_transpose.hpp"
#include "su2ent/state.hpp"

namespace {

using namespace su2ent;

void bm_clebsch_gordan(benchmark::State& bs) {
  const int ts = static_cast<int>(bs.range(0));
  for (auto _ : bs) {
    double sum = 0.0;
    for (int tm1 = -ts; tm1 <= ts; tm1 += 2)
      for (int tm2 = -ts; tm2 <= ts; tm2 += 2)
        sum += clebsch_gordan(ts, ts, tm1, tm2, 2 * ts, tm1 + tm2);
    benchmark::DoNotOptimize(sum);
  }
}

void bm_diagonal(benchmark::State& bs) {
  const int ts = static_cast<int>(bs.range(0));
  const SU2State state = random_state(ts, ts, 1);
  b_from_diagonal(state);  // warm the per-pair tables
  for (auto _ : bs) benchmark::DoNotOptimize(b_from_diagonal(state));
}

void bm_sum_rules(benchmark::State& bs) {
  const int ts = static_cast<int>(bs.range(0));
  const SU2State state = random_state(ts, ts, 1);
  b_from_sum_rules(state);
  for (auto _ : bs) benchmark::DoNotOptimize(b_from_sum_rules(state));
}

void bm_dense(benchmark::State& bs) {
  const int ts = static_cast<int>(bs.range(0));
  const SU2State state = random_state(ts, ts, 1);
  b_from_dense(state);
  for (auto _ : bs) benchmark::DoNotOptimize(b_from_dense(state));
}

void bm_full_report(benchmark::State& bs) {
  const int ts = static_cast<int>(bs.range(0));
  const SU2State state = random_state(ts, ts, 1);
  full_report(state);
  for (auto _ : bs) benchmark::DoNotOptimize(full_report(state));
}

}  // namespace

BENCHMARK(bm_clebsch_gordan)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(bm_diagonal)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(bm_sum_rules)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(bm_dense)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(bm_full_report)->Arg(2)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
