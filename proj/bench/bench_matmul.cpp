#include <benchmark/benchmark.h>

#include "qgraft/braided.hpp"
#include "qgraft/graft.hpp"

using namespace qgraft;

namespace {

const SMatrix& f4_leg(Slot slot) {
  static const auto big = tensor_R({standard_R({3, Module::natural, 1}), standard_R({2, Module::natural, Rational(1, 2)})});
  static const SMatrix m12 = embed_on_triple(big, Slot::s12), m13 = embed_on_triple(big, Slot::s13),
                       m23 = embed_on_triple(big, Slot::s23);
  return slot == Slot::s12 ? m12 : slot == Slot::s13 ? m13 : m23;
}

void BM_exact_serial(benchmark::State& st) {
  const auto &a = f4_leg(Slot::s12), &b = f4_leg(Slot::s13);
  for (auto _ : st) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_exact_parallel(benchmark::State& st) {
  const auto &a = f4_leg(Slot::s12), &b = f4_leg(Slot::s13);
  for (auto _ : st) benchmark::DoNotOptimize(multiply_parallel(a, b));
}

void BM_numeric_serial(benchmark::State& st) {
  const auto a = evaluate(f4_leg(Slot::s12), 3), b = evaluate(f4_leg(Slot::s23), 3);
  for (auto _ : st) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_numeric_parallel(benchmark::State& st) {
  const auto a = evaluate(f4_leg(Slot::s12), 3), b = evaluate(f4_leg(Slot::s23), 3);
  for (auto _ : st) benchmark::DoNotOptimize(multiply_parallel(a, b));
}

void BM_f4_pairing_degree3(benchmark::State& st) {
  auto spec = GraftSpec::f4();
  const auto pair = majid_pair(tensor_R({standard_R(spec.factors[0]), standard_R(spec.factors[1])}),
                               spec.eigen_to_minus_one);
  for (auto _ : st) benchmark::DoNotOptimize(pairing_matrix(pair, 3));
}

}  // namespace

BENCHMARK(BM_exact_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exact_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_numeric_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_numeric_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_f4_pairing_degree3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
