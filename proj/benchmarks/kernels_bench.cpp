#include <benchmark/benchmark.h>

#include <random>

#include "skcert/certify.hpp"
#include "skcert/modpoly.hpp"
#include "skcert/polygon.hpp"
#include "skcert/smooth.hpp"

namespace {

using namespace skcert;

void BM_Factorize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const unsigned bits = static_cast<unsigned>(state.range(0));
  std::vector<u64> inputs(256);
  for (u64& v : inputs) v = (rng() >> (64 - bits)) | 1;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Factorize)->Arg(40)->Arg(62);

void BM_LowerHull(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const i64 k = state.range(0);
  std::vector<ValuedPoint> pts;
  for (i64 j = 0; j <= k; ++j) pts.push_back({j, Valuation(rng() % 21)});
  for (auto _ : state) benchmark::DoNotOptimize(lower_hull(pts));
}
BENCHMARK(BM_LowerHull)->Arg(8)->Arg(30)->Arg(1000);

void BM_Certify(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<PolyInstance> inputs;
  for (int i = 0; i < 256; ++i) {
    inputs.push_back(PolyInstance::from_m_k(Family::Laguerre, 1'000'000 + rng() % 1'000'000'000'000ull,
                                            static_cast<u64>(state.range(0))));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certify(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Certify)->Arg(8)->Arg(16);

void BM_CycleTypeMod(benchmark::State& state) {
  const u64 k = static_cast<u64>(state.range(0));
  const PolyInstance inst = PolyInstance::from_m_k(Family::Trimmed, 123'456'789, k);
  u64 r = (u64{1} << 40) - 87;
  while (!is_prime(r)) --r;
  const ModPoly f = reduce_instance(inst, r);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_type_mod(f));
}
BENCHMARK(BM_CycleTypeMod)->Arg(8)->Arg(16)->Arg(32);

void BM_OracleConfirm(benchmark::State& state) {
  const PolyInstance inst(Family::Trimmed, 3, 11);
  u64 seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_confirm(inst, 100, seed++));
}
BENCHMARK(BM_OracleConfirm);

void BM_PsiSieve(benchmark::State& state) {
  const u64 x = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi(x, 100));
}
BENCHMARK(BM_PsiSieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
