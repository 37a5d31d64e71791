// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "afdt/corpus.h"
#include "afdt/kernels.h"
#include "support/test_support.h"

namespace {

using namespace afdt;
using kernels::DefenseVector;

std::vector<DefenseVector> all_vectors(std::size_t n) {
  std::vector<DefenseVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    DefenseVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U;
    out.push_back(v);
  }
  return out;
}

const Circuit& gsaas() {
  static const Circuit c = Circuit::compile(corpus::load("gsaas"));
  return c;
}

const Circuit& wide() {
  static const Circuit c = [] {
    testing::RandomModelOptions opt;
    opt.max_risk = 20;
    opt.max_gates = 24;
    opt.max_defense = 4;
    // Seed chosen for a model with close to the maximum number of risk leaves.
    for (std::uint64_t seed = 0;; ++seed) {
      auto m = testing::random_model(seed, opt);
      if (leaves(m).risk().size() >= 18) return Circuit::compile(m);
    }
  }();
  return c;
}

template <auto Fn>
void BM_CutFamilies(benchmark::State& state) {
  const auto& c = gsaas();
  const auto d = all_vectors(c.defense_count());
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c, d, 100000));
  state.SetItemsProcessed(state.iterations() * std::int64_t(d.size()));
}
BENCHMARK(BM_CutFamilies<kernels::serial::cut_families>)->Name("cut_families/serial");
BENCHMARK(BM_CutFamilies<kernels::omp::cut_families>)->Name("cut_families/omp");

template <auto Fn>
void BM_Enumerate(benchmark::State& state) {
  const auto& c = gsaas();
  std::vector<double> p(c.risk_count(), 0.05);
  DefenseVector d(c.defense_count(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c, p, d));
}
BENCHMARK(BM_Enumerate<kernels::serial::enumerate_probability>)->Name("enumerate/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate<kernels::omp::enumerate_probability>)->Name("enumerate/omp")->Unit(benchmark::kMillisecond);

template <auto Fn>
void BM_MinimalMasks(benchmark::State& state) {
  const auto& c = wide();
  DefenseVector d(c.defense_count(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c, d));
}
BENCHMARK(BM_MinimalMasks<kernels::serial::minimal_activating_masks>)->Name("brute_force/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalMasks<kernels::omp::minimal_activating_masks>)->Name("brute_force/omp")->Unit(benchmark::kMillisecond);

template <auto Fn>
void BM_MonteCarlo(benchmark::State& state) {
  const auto& c = gsaas();
  std::vector<double> p(c.risk_count(), 0.05);
  DefenseVector d(c.defense_count(), 0);
  const auto samples = std::uint64_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c, p, d, samples, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo<kernels::serial::monte_carlo_hits>)->Name("monte_carlo/serial")->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo<kernels::omp::monte_carlo_hits>)->Name("monte_carlo/omp")->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
