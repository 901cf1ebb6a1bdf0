#include <benchmark/benchmark.h>

#include <random>

#include "jhkit/collector.hpp"
#include "jhkit/jameshopf.hpp"
#include "jhkit/series.hpp"
#include "jhkit/tensorcoalg.hpp"
#include "jhkit/verify.hpp"

namespace {

jhkit::Word long_word(int length) {
  std::mt19937_64 rng(7);
  auto X = jhkit::Alphabet::parse("x,y,z");
  jhkit::Word w(X);
  while (static_cast<int>(w.size()) < length) w = w * jhkit::random_word(X, 4, rng);
  return w;
}

void BM_JamesHopf(benchmark::State& state) {
  const auto w = long_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jhkit::abelianized_hopf(w, 3));
}
BENCHMARK(BM_JamesHopf)->Arg(16)->Arg(32)->Arg(64);

void BM_HopfMagnus(benchmark::State& state) {
  const auto w = long_word(static_cast<int>(state.range(0)));
  const auto ring = jhkit::CoefficientRing::prime_field(2);
  for (auto _ : state) benchmark::DoNotOptimize(jhkit::hopf_magnus(w, 2, 3, ring, jhkit::SequenceOrder::right_lex));
}
BENCHMARK(BM_HopfMagnus)->Arg(16)->Arg(32);

void BM_Magnus(benchmark::State& state) {
  const auto w = long_word(64);
  for (auto _ : state)
    benchmark::DoNotOptimize(jhkit::magnus(w, static_cast<int>(state.range(0)), jhkit::CoefficientRing::integers()));
}
BENCHMARK(BM_Magnus)->DenseRange(2, 6, 2);

void BM_Convolution(benchmark::State& state) {
  jhkit::TensorAmbient amb{2, jhkit::Alphabet::parse("a,b,c,d"), static_cast<int>(state.range(0))};
  const auto f = jhkit::antipode_endo(amb), g = jhkit::identity_endo(amb);
  for (auto _ : state) benchmark::DoNotOptimize(jhkit::convolution(f, g));
}
BENCHMARK(BM_Convolution)->DenseRange(2, 4);

void BM_Collection(benchmark::State& state) {
  const auto w = long_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jhkit::hopf_via_collection(w, 2));
}
BENCHMARK(BM_Collection)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
