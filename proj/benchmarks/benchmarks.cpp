#include <benchmark/benchmark.h>

#include "gelfand/character_table.hpp"
#include "gelfand/crack.hpp"
#include "gelfand/oracle.hpp"
#include "gelfand/partition.hpp"
#include "gelfand/wreath.hpp"

namespace {

void bm_symmetric_table(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gelfand::CharacterTable::symmetric(k));
  }
}
BENCHMARK(bm_symmetric_table)->Arg(8)->Arg(12)->Arg(16);

void bm_partition_count(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gelfand::partition_count(k));
  }
}
BENCHMARK(bm_partition_count)->Arg(1000)->Arg(10000);

void bm_max_dimension(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gelfand::max_dimension(k));
  }
}
BENCHMARK(bm_max_dimension)->Arg(20)->Arg(40)->Arg(60);

void bm_is_gelfand(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  gelfand::CharacterTable t = gelfand::CharacterTable::symmetric(k);
  gelfand::SearchOptions opts;
  opts.exhaustive = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gelfand::is_gelfand(t, n, opts));
  }
}
BENCHMARK(bm_is_gelfand)->Args({5, 3})->Args({6, 3})->Args({3, 6});

void bm_is_gelfand_workers(benchmark::State& state) {
  gelfand::CharacterTable t = gelfand::CharacterTable::symmetric(7);
  gelfand::SearchOptions opts;
  opts.exhaustive = true;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gelfand::is_gelfand(t, 3, opts));
  }
}
BENCHMARK(bm_is_gelfand_workers)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_double_cosets(benchmark::State& state) {
  gelfand::WreathPair pair =
      gelfand::build_wreath(gelfand::SmallGroupKind::symmetric, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gelfand::double_cosets(pair.group, pair.k_members));
  }
}
BENCHMARK(bm_double_cosets);

void bm_convolution_commutes(benchmark::State& state) {
  gelfand::WreathPair pair =
      gelfand::build_wreath(gelfand::SmallGroupKind::cyclic, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gelfand::convolution_commutes(pair.group, pair.k_members));
  }
}
BENCHMARK(bm_convolution_commutes);

}  // namespace

BENCHMARK_MAIN();
