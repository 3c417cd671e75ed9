// Microbenchmarks for the hot paths: the trace pairing, encoding and
// collision scanning, the decoder LPs, and the exhaustive classical sweep.
#include <alc/classical.hpp>
#include <alc/engine.hpp>
#include <alc/squarebit.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace alc;

void BM_TraceProduct(benchmark::State& state) {
  const auto& c = catalog();
  const GptEffect effect = c.effect(17);
  const GptState omega = c.state(21);
  for (auto _ : state) {
    Rational v = probability(effect, omega);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TraceProduct);

void BM_Table3(benchmark::State& state) {
  for (auto _ : state) {
    Table3 t = compute_table3();
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_Table3);

void BM_EncodeProductFamily(benchmark::State& state) {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy strategy;
  strategy.kind = FamilyKind::product;
  strategy.n_strings = 4;
  strategy.alice_assign = {0, 1, 2, 3};
  strategy.bob_assign = {3, 1, 0, 2};
  for (auto _ : state) {
    EncodedFamily family = encode(hs, strategy);
    bool collides = has_collision(family);
    benchmark::DoNotOptimize(collides);
  }
}
BENCHMARK(BM_EncodeProductFamily);

void BM_PerfectDecoderLp(benchmark::State& state) {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy diagonal;
  diagonal.kind = FamilyKind::product;
  diagonal.n_strings = 4;
  diagonal.alice_assign = {0, 1, 2, 3};
  diagonal.bob_assign = {0, 1, 2, 3};
  const EncodedFamily family = encode(hs, diagonal);
  for (auto _ : state) {
    auto witness = perfect_decoder_exists(hs, family);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_PerfectDecoderLp);

void BM_BestValueLp(benchmark::State& state) {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy diagonal;
  diagonal.kind = FamilyKind::product;
  diagonal.n_strings = 4;
  diagonal.alice_assign = {0, 1, 2, 3};
  diagonal.bob_assign = {0, 1, 2, 3};
  const EncodedFamily family = encode(hs, diagonal);
  for (auto _ : state) {
    Rational best = best_decoder_value(hs, family);
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_BestValueLp);

void BM_ClassicalExhaustive(benchmark::State& state) {
  for (auto _ : state) {
    ClassicalOptimum optimum = exhaustive_optimum();
    benchmark::DoNotOptimize(optimum);
  }
}
BENCHMARK(BM_ClassicalExhaustive);

void BM_TwoStringSearch(benchmark::State& state) {
  const GptModel bit = build_classical_bit_model();
  SearchOptions options;
  options.jobs = 1;
  for (auto _ : state) {
    SearchReport report = search_perfect(bit, 2, FamilySelection::product, options);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_TwoStringSearch);

}  // namespace

BENCHMARK_MAIN();
