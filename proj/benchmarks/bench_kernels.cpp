#include <benchmark/benchmark.h>

#include "symplectica/bunch.hpp"
#include "symplectica/dirac.hpp"
#include "symplectica/sampling.hpp"
#include "symplectica/smallmat.hpp"

using namespace symplectica;

namespace {

std::vector<BeamMatrix4> beams(std::size_t n) {
  Rng rng(1);
  std::vector<BeamMatrix4> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_physical_beam4(rng));
  return out;
}

void BM_DetSym4ClosedForm(benchmark::State& state) {
  const auto bs = beams(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(det_sym4(bs[i++ % bs.size()]));
}
BENCHMARK(BM_DetSym4ClosedForm);

void BM_DetLU4(benchmark::State& state) {
  std::vector<Mat4> ms;
  for (const auto& b : beams(64)) ms.push_back(b.representative());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(det_oracle(ms[i++ % ms.size()]));
}
BENCHMARK(BM_DetLU4);

void BM_InvSym4ClosedForm(benchmark::State& state) {
  const auto bs = beams(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(inv_sym4(bs[i++ % bs.size()]));
}
BENCHMARK(BM_InvSym4ClosedForm);

void BM_InvGaussJordan4(benchmark::State& state) {
  std::vector<Mat4> ms;
  for (const auto& b : beams(64)) ms.push_back(b.representative());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(inv_oracle(ms[i++ % ms.size()]));
}
BENCHMARK(BM_InvGaussJordan4);

void BM_Emittances4(benchmark::State& state) {
  const auto bs = beams(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(emittances4(bs[i++ % bs.size()]));
}
BENCHMARK(BM_Emittances4);

void BM_Normalize4(benchmark::State& state) {
  const auto bs = beams(64);
  const auto strategy = state.range(0) ? DiagStrategy::direct : DiagStrategy::block_first;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize4(bs[i++ % bs.size()], strategy));
}
BENCHMARK(BM_Normalize4)->Arg(0)->Arg(1);

void BM_DecoupleSingle(benchmark::State& state) {
  const auto bs = beams(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decouple_single(bs[i++ % bs.size()], Coord::x));
}
BENCHMARK(BM_DecoupleSingle);

void BM_Normalize6(benchmark::State& state) {
  Rng rng(2);
  std::vector<Mat6> ms;
  for (int k = 0; k < 64; ++k) ms.push_back(random_physical_matrix<6>(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize6(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Normalize6);

void BM_Expm4(benchmark::State& state) {
  Rng rng(3);
  const Mat4 r = random_symplectic<4>(rng);
  const Mat4 g = symplectic_form<4>() * (r + r.transpose());
  for (auto _ : state) benchmark::DoNotOptimize(expm(g));
}
BENCHMARK(BM_Expm4);

}  // namespace

BENCHMARK_MAIN();
