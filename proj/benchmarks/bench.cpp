#include <asmprism/ideal.hpp>
#include <asmprism/perm.hpp>
#include <asmprism/pipedream.hpp>
#include <asmprism/prism.hpp>

#include <benchmark/benchmark.h>

using namespace asmprism;

static void BM_EnumerateAsms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_asms(n));
}
BENCHMARK(BM_EnumerateAsms)->DenseRange(3, 6);

static void BM_PermSet(benchmark::State& state) {
  const auto all = enumerate_asms(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& a : all) benchmark::DoNotOptimize(perm_set(a));
  }
}
BENCHMARK(BM_PermSet)->DenseRange(3, 5);

static void BM_PrismPolynomial(benchmark::State& state) {
  const auto all = enumerate_asms(static_cast<int>(state.range(0)));
  const bool parabolic = state.range(1) != 0;
  for (auto _ : state) {
    for (const auto& a : all) benchmark::DoNotOptimize(asm_polynomial(parabolic ? parabolic_model(a) : bigrassmannian_model(a)));
  }
}
BENCHMARK(BM_PrismPolynomial)->ArgsProduct({{3, 4, 5}, {0, 1}});

static void BM_PipeDreamsLongestElement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> w0;
  for (int k = n; k >= 1; --k) w0.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(schubert_polynomial(Perm(w0), n));
}
BENCHMARK(BM_PipeDreamsLongestElement)->DenseRange(3, 6);

static void BM_SchubertOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for_each_permutation(n, [](const Perm& w) { benchmark::DoNotOptimize(schubert_oracle(w)); });
  }
}
BENCHMARK(BM_SchubertOracle)->DenseRange(3, 5);

static void BM_StanleyReisnerFacets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = enumerate_asms(n);
  for (auto _ : state) {
    for (const auto& a : all) benchmark::DoNotOptimize(stanley_reisner_facets(initial_ideal(a), n));
  }
}
BENCHMARK(BM_StanleyReisnerFacets)->DenseRange(3, 4);

static void BM_VerifyBijection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = enumerate_asms(n);
  for (auto _ : state) {
    for (const auto& a : all) benchmark::DoNotOptimize(verify_bijection(parabolic_model(a), n));
  }
}
BENCHMARK(BM_VerifyBijection)->DenseRange(3, 4);

BENCHMARK_MAIN();
