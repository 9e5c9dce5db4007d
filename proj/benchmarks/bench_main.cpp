#include <benchmark/benchmark.h>

#include "kesten/fock.hpp"
#include "kesten/kesten_measure.hpp"
#include "kesten/mixed_moments.hpp"
#include "kesten/moments.hpp"
#include "kesten/partition.hpp"

namespace {

void BM_OrderedPairEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    kesten::MultiPoly total;
    kesten::for_each_ordered(n, kesten::EnumerationOptions{true, false, std::nullopt, false},
                             [&](const kesten::OrderedPartition& P) { total += kesten::weight(P); });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_OrderedPairEnumeration)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Recursion(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kesten::sequences_by_recursion(order, 3));
}
BENCHMARK(BM_Recursion)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kesten::r_by_closed_form(order));
}
BENCHMARK(BM_ClosedForm)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_PositionMoment(benchmark::State& state) {
  const auto sig = kesten::IntervalSignature::parse("f g g f f g h h g f", "f=[0,1],g=[1,2],h=[2,7/2]");
  for (auto _ : state) benchmark::DoNotOptimize(kesten::position_moment(sig));
}
BENCHMARK(BM_PositionMoment)->Unit(benchmark::kMillisecond);

void BM_PoissonOperator(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kesten::poisson_moment_operator(n));
}
BENCHMARK(BM_PoissonOperator)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state) {
  const kesten::KestenMeasure m(0.3, 0.2);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kesten::quadrature_moment(m, n));
}
BENCHMARK(BM_Quadrature)->Arg(2)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
