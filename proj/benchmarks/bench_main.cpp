#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "gmsrg/codes.hpp"
#include "gmsrg/distinguish.hpp"
#include "gmsrg/srg.hpp"
#include "gmsrg/switching.hpp"

using namespace gmsrg;

namespace {

QuadricKind kind_of(const benchmark::State& state) {
  return state.range(1) == 0 ? QuadricKind::elliptic : QuadricKind::hyperbolic;
}

void BM_BuildGamma(benchmark::State& state) {
  const auto form = canonical_form(static_cast<int>(state.range(0)), kind_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma(form));
}
BENCHMARK(BM_BuildGamma)->ArgsProduct({{5, 7, 9}, {0, 1}});

void BM_VerifySrg(benchmark::State& state) {
  const Graph g = build_gamma(canonical_form(static_cast<int>(state.range(0)), kind_of(state)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_srg(g));
}
BENCHMARK(BM_VerifySrg)->ArgsProduct({{5, 7, 9}, {0, 1}});

void BM_SwitchAndCode(benchmark::State& state) {
  const auto form = canonical_form(static_cast<int>(state.range(0)), QuadricKind::elliptic);
  const Graph g = build_gamma(form);
  const auto S = vertex_indices(g, build_S(make_config(form, 1, SwitchVariant::pair)));
  for (auto _ : state) {
    const Graph h = gm_switch(g, S);
    benchmark::DoNotOptimize(code_from_graph(h));
  }
}
BENCHMARK(BM_SwitchAndCode)->Arg(5)->Arg(7)->Arg(9);

void BM_WeightDistribution(benchmark::State& state) {
  const auto form = canonical_form(static_cast<int>(state.range(0)), QuadricKind::hyperbolic);
  const Graph g = build_gamma(form);
  const Graph h = gm_switch(g, vertex_indices(g, build_S(make_config(form, 1, SwitchVariant::single))));
  const BinaryCode code = code_from_graph(h);
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code));
}
BENCHMARK(BM_WeightDistribution)->Arg(5)->Arg(7)->Arg(9);

void BM_IsomorphicRelabelling(benchmark::State& state) {
  const Graph g = build_gamma(canonical_form(5, kind_of(state)));
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(1);
  std::shuffle(perm.begin(), perm.end(), rng);
  const Graph h = g.permuted(perm);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h));
}
BENCHMARK(BM_IsomorphicRelabelling)->Args({5, 0})->Args({5, 1});

}  // namespace

BENCHMARK_MAIN();
