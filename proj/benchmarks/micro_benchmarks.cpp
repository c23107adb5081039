// Per-method fidelity cost and the kernels underneath it, over 2^k dimensions.

#include <benchmark/benchmark.h>

#include "qfid/fidelity.hpp"
#include "qfid/kernels.hpp"
#include "qfid/states.hpp"

namespace {

using qfid::FidelityMethod;

void fidelity_method(benchmark::State& state, FidelityMethod method) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto [rho, sigma] =
      qfid::generate_pair(qfid::StateFamily{qfid::FamilyTag::mixed_full_rank, std::nullopt}, dim, 7);
  for (auto _ : state) benchmark::DoNotOptimize(qfid::fidelity(rho, sigma, method).value);
  state.SetLabel(std::string(qfid::method_label(method)));
}

BENCHMARK_CAPTURE(fidelity_method, two_sqrtm, FidelityMethod::two_sqrtm)->RangeMultiplier(2)->Range(2, 256);
BENCHMARK_CAPTURE(fidelity_method, three_svd, FidelityMethod::three_svd)->RangeMultiplier(2)->Range(2, 256);
BENCHMARK_CAPTURE(fidelity_method, sqrtmh_eigvalsh, FidelityMethod::sqrtmh_eigvalsh)
    ->RangeMultiplier(2)
    ->Range(2, 256);
BENCHMARK_CAPTURE(fidelity_method, sqrtm_svd_svd, FidelityMethod::sqrtm_svd_svd)->RangeMultiplier(2)->Range(2, 256);
BENCHMARK_CAPTURE(fidelity_method, eigvals, FidelityMethod::eigvals)->RangeMultiplier(2)->Range(2, 256);

qfid::ComplexMatrix hermitian(std::size_t dim) {
  return qfid::symmetrize(qfid::random_ginibre(dim, 11));
}

void kernel_eigh(benchmark::State& state) {
  const qfid::ComplexMatrix a = hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qfid::eigh(a).eigenvalues.data());
}
BENCHMARK(kernel_eigh)->RangeMultiplier(4)->Range(4, 256);

void kernel_eigvals_general(benchmark::State& state) {
  const qfid::ComplexMatrix a = qfid::random_ginibre(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(qfid::eigvals_general(a));
}
BENCHMARK(kernel_eigvals_general)->RangeMultiplier(4)->Range(4, 256);

void kernel_svd(benchmark::State& state) {
  const qfid::ComplexMatrix a = qfid::random_ginibre(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(qfid::singular_values(a).data());
}
BENCHMARK(kernel_svd)->RangeMultiplier(4)->Range(4, 256);

void kernel_matmul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const qfid::ComplexMatrix a = qfid::random_ginibre(dim, 14);
  const qfid::ComplexMatrix b = qfid::random_ginibre(dim, 15);
  for (auto _ : state) benchmark::DoNotOptimize(qfid::matmul(a, b));
}
BENCHMARK(kernel_matmul)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
