#include <benchmark/benchmark.h>

#include "lssd/catalog.hpp"
#include "lssd/geometry.hpp"
#include "lssd/hadamard.hpp"
#include "lssd/linked_system.hpp"
#include "lssd/matrix.hpp"
#include "lssd/quadratic_forms.hpp"

namespace {

void BM_rank_exact_48(benchmark::State& state) {
  lssd::LssdGraph g = lssd::lssd_from_unbiased_hadamards(
      lssd::beth_wocjan_unbiased_set(lssd::catalog_oa16(),
                                     lssd::catalog_h4()));
  auto [gram, co] = lssd::equiangular_gram(g, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(lssd::rank_exact(gram.entries));
}
BENCHMARK(BM_rank_exact_48);

void BM_verify_kerdock_w8(benchmark::State& state) {
  lssd::LssdGraph g = lssd::cameron_seidel_lssd(lssd::kerdock_catalog_n4());
  for (auto _ : state)
    benchmark::DoNotOptimize(lssd::verify_lssd(g).ok());
}
BENCHMARK(BM_verify_kerdock_w8);

void BM_beth_wocjan_16(benchmark::State& state) {
  lssd::OrthArray oa = lssd::catalog_oa16();
  lssd::Hadamard h = lssd::catalog_h4();
  for (auto _ : state) {
    lssd::UnbiasedHadamardSet s = lssd::beth_wocjan_unbiased_set(oa, h);
    benchmark::DoNotOptimize(lssd::lssd_from_unbiased_hadamards(s).w);
  }
}
BENCHMARK(BM_beth_wocjan_16);

void BM_unbiased_check_1296(benchmark::State& state) {
  lssd::OrthArray oa =
      lssd::macneish_product(lssd::mols_oa(4), lssd::mols_oa(9));
  lssd::UnbiasedHadamardSet s =
      lssd::beth_wocjan_unbiased_set(oa, lssd::catalog_h36());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lssd::unbiased(s.matrices[0], s.matrices[1]).unbiased);
}
BENCHMARK(BM_unbiased_check_1296);

}  // namespace

BENCHMARK_MAIN();
