#include <benchmark/benchmark.h>

#include "frobnil/verify.hpp"

using namespace frobnil;

static void BM_nh_mul(benchmark::State& state) {
  const auto cl = clifford_odd();
  const unsigned n = static_cast<unsigned>(state.range(0));
  Rng rng(1);
  const NHElement a = random_nh_element(cl, n, 3, 4, rng);
  const NHElement b = random_nh_element(cl, n, 3, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nh_mul(cl, a, b));
}
BENCHMARK(BM_nh_mul)->Arg(2)->Arg(3)->Arg(4);

static void BM_ddiff(benchmark::State& state) {
  const auto k = ground();
  const PolElement f =
      PolElement::term(PolKey{unit_word(k, 3), {2, 2, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(ddiff(k, 1, f));
}
BENCHMARK(BM_ddiff);

static void BM_relation_suite(benchmark::State& state) {
  const auto cl = clifford_odd();
  for (auto _ : state) benchmark::DoNotOptimize(nh_verify_relations(cl, 2));
}
BENCHMARK(BM_relation_suite);

static void BM_tau(benchmark::State& state) {
  const auto c3 = cyclic_group(3);
  for (auto _ : state) benchmark::DoNotOptimize(tau_i(c3, 4, 2));
}
BENCHMARK(BM_tau);

static void BM_psi_roundtrip(benchmark::State& state) {
  const auto cl = clifford_odd();
  Rng rng(2);
  const NHElement e = random_nh_element(cl, 3, 2, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(psi_inv(cl, psi(cl, e)));
}
BENCHMARK(BM_psi_roundtrip);

BENCHMARK_MAIN();
