#include <benchmark/benchmark.h>

#include "coxtile/render.hpp"
#include "coxtile/tilings.hpp"

using namespace coxtile;

namespace {

const CoxeterSystem& system_A4() {
  static const CoxeterSystem sys = build_system({Family::A, 4});
  return sys;
}

const CoxeterSystem& system_D4() {
  static const CoxeterSystem sys = build_system({Family::D, 4});
  return sys;
}

const LengthTable& table_A4() {
  static const LengthTable table = LengthTable::build(system_A4().gens, 1000000);
  return table;
}

const LengthTable& table_D4() {
  static const LengthTable table = LengthTable::build(system_D4().gens, 1000000);
  return table;
}

Word longest_word(const LengthTable& table) {
  WordEnumerator enumerator(table);
  return enumerator.enumerate(table.longest())[0];
}

void BM_BuildTableA4(benchmark::State& state) {
  const CoxeterSystem& sys = system_A4();
  for (auto _ : state)
    benchmark::DoNotOptimize(LengthTable::build(sys.gens, 1000000));
}
BENCHMARK(BM_BuildTableA4);

void BM_BuildTableD5(benchmark::State& state) {
  const CoxeterSystem sys = build_system({Family::D, 5});
  for (auto _ : state)
    benchmark::DoNotOptimize(LengthTable::build(sys.gens, 1000000));
}
BENCHMARK(BM_BuildTableD5);

void BM_EnumerateLongestA4(benchmark::State& state) {
  const LengthTable& table = table_A4();
  for (auto _ : state) {
    WordEnumerator enumerator(table);
    benchmark::DoNotOptimize(enumerator.enumerate(table.longest()));
  }
}
BENCHMARK(BM_EnumerateLongestA4);

void BM_PartitionLongestA4(benchmark::State& state) {
  const CoxeterSystem& sys = system_A4();
  const LengthTable& table = table_A4();
  WordEnumerator enumerator(table);
  const std::vector<Word> words = enumerator.enumerate(table.longest());
  const RelationSet rels = tiling_relations(sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(partition_words(sys, words, rels));
}
BENCHMARK(BM_PartitionLongestA4);

void BM_TileLongestA4(benchmark::State& state) {
  const CoxeterSystem& sys = system_A4();
  const LengthTable& table = table_A4();
  const Word w = longest_word(table);
  for (auto _ : state)
    benchmark::DoNotOptimize(tile_word(sys, table, w));
}
BENCHMARK(BM_TileLongestA4);

void BM_TileLongestD4(benchmark::State& state) {
  const CoxeterSystem& sys = system_D4();
  const LengthTable& table = table_D4();
  const Word w = longest_word(table);
  for (auto _ : state)
    benchmark::DoNotOptimize(tile_word(sys, table, w));
}
BENCHMARK(BM_TileLongestD4);

void BM_VerifyAllD4(benchmark::State& state) {
  const CoxeterSystem& sys = system_D4();
  const LengthTable& table = table_D4();
  const RelationSet rels = tiling_relations(sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_all_elements(sys, table, rels));
}
BENCHMARK(BM_VerifyAllD4);

void BM_SubtileLongestH3(benchmark::State& state) {
  const AdmissiblePartition p = table_row("D6-H3");
  WordEnumerator enumerator(p.sub_table);
  const Word xw = enumerator.enumerate(p.sub_table.index_of(x_longest(p)))[0];
  for (auto _ : state)
    benchmark::DoNotOptimize(subtiling(p, xw));
}
BENCHMARK(BM_SubtileLongestH3);

void BM_GeometryCheckD4(benchmark::State& state) {
  const CoxeterSystem& sys = system_D4();
  const LengthTable& table = table_D4();
  const Tiling t = tile_word(sys, table, longest_word(table));
  const EdgeBasis basis = default_basis(sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_geometry(basis, t));
}
BENCHMARK(BM_GeometryCheckD4);

void BM_SvgLongestD4(benchmark::State& state) {
  const CoxeterSystem& sys = system_D4();
  const LengthTable& table = table_D4();
  const Tiling t = tile_word(sys, table, longest_word(table));
  const EdgeBasis basis = default_basis(sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(to_svg(t, basis));
}
BENCHMARK(BM_SvgLongestD4);

}  // namespace

BENCHMARK_MAIN();
