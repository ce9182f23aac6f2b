// Timings for the exact checkers and constructions on catalog data.

#include "hlsb/catalog.hpp"
#include "hlsb/constructions.hpp"
#include "hlsb/yang_baxter.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hlsb;

const Definition& row_instance(const char* id, std::size_t k = 0) { return catalog_row(id).instances.at(k); }

void BM_VerifyCatalog(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_all().passed());
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

void BM_CheckBialgebra(benchmark::State& st, const char* id) {
  const auto& row = catalog_row(id);
  const auto& B = row.instances.front().structure;
  for (auto _ : st) benchmark::DoNotOptimize(check_bialgebra(B, row.multiplicative).passed());
}
BENCHMARK_CAPTURE(BM_CheckBialgebra, two_dim, "two-dim");
BENCHMARK_CAPTURE(BM_CheckBialgebra, diag_1, "diag-1");
BENCHMARK_CAPTURE(BM_CheckBialgebra, jordan_12, "jordan-12");

void BM_Dualize(benchmark::State& st) {
  const auto& B = row_instance("diag-1").structure;
  for (auto _ : st) benchmark::DoNotOptimize(dualize(B));
}
BENCHMARK(BM_Dualize);

// [[r,r]] for r = e1 ^ e2 on a 3-dim catalog algebra
void BM_Chybe(benchmark::State& st) {
  const auto& A = row_instance("diag-1").structure.algebra;
  Tensor2 t(A.basis, Parity::even);
  t(0, 1) = Scalar(1);
  t(1, 0) = Scalar(-1);
  RMatrix r(A, t);
  for (auto _ : st) benchmark::DoNotOptimize(chybe_residual(A, r));
}
BENCHMARK(BM_Chybe);

}  // namespace

BENCHMARK_MAIN();
