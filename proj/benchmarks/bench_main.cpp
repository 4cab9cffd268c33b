#include <benchmark/benchmark.h>

#include <vector>

#include "bianchi/gamma_star.hpp"
#include "bianchi/ideal.hpp"
#include "bianchi/sampling.hpp"
#include "bianchi/spin.hpp"

namespace {

using namespace bianchi;

std::vector<ExtendedMatrix> samples(std::int64_t m, std::size_t n) {
  Sampler s(42);
  const FieldParams k = field_params(m);
  std::vector<ExtendedMatrix> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.extended_element(k, 3));
  return out;
}

void BM_ExtMul(benchmark::State& state) {
  const auto xs = samples(state.range(0), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext_mul(xs[i % 64], xs[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_ExtMul)->Arg(1)->Arg(5)->Arg(30);

void BM_Membership(benchmark::State& state) {
  Sampler s(43);
  const FieldParams k = field_params(state.range(0));
  std::vector<ExtendedMatrix> xs;
  for (std::int64_t d : squarefree_divisors(k.d_K)) xs.push_back(s.coset_element(k, d, 3));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_member_gamma_star(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Membership)->Arg(1)->Arg(5)->Arg(30);

void BM_IdealHnf(benchmark::State& state) {
  Sampler s(44);
  const FieldParams k = field_params(state.range(0));
  std::vector<KElement> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(s.integral_element(k, 50));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_from_generators(gens, k));
}
BENCHMARK(BM_IdealHnf)->Arg(1)->Arg(5)->Arg(30);

void BM_Phi(benchmark::State& state) {
  const auto xs = samples(state.range(0), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(phi(xs[i++ % 64]));
}
BENCHMARK(BM_Phi)->Arg(1)->Arg(5)->Arg(30);

void BM_SpinLift(benchmark::State& state) {
  std::vector<OrthoMap> maps;
  for (const ExtendedMatrix& p : samples(state.range(0), 64)) maps.push_back(phi(p));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(spin_lift(maps[i++ % 64]));
}
BENCHMARK(BM_SpinLift)->Arg(1)->Arg(5)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
