#include <benchmark/benchmark.h>

#include "symcent/action.hpp"
#include "symcent/catalog.hpp"
#include "symcent/coherent.hpp"
#include "symcent/radical.hpp"
#include "symcent/symmetric.hpp"

namespace {

using namespace symcent;

const PermutationGroup& psl2_496() {
  static const PermutationGroup g = build_psl2(32, Psl2Action::dihedral_cosets);
  return g;
}

void BM_SchreierSims(benchmark::State& state) {
  const auto& src = psl2_496();
  for (auto _ : state) {
    PermutationGroup g(src.degree(), src.generators());
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims)->Unit(benchmark::kMillisecond);

void BM_BuildPsl2Cosets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_psl2(32, Psl2Action::dihedral_cosets).degree());
}
BENCHMARK(BM_BuildPsl2Cosets)->Unit(benchmark::kMillisecond);

void BM_TwoOrbits(benchmark::State& state) {
  const auto& g = psl2_496();
  for (auto _ : state) benchmark::DoNotOptimize(two_orbits(g).rank());
}
BENCHMARK(BM_TwoOrbits)->Unit(benchmark::kMillisecond);

void BM_IntersectionTensor(benchmark::State& state) {
  const auto cc = two_orbits(psl2_496());
  for (auto _ : state) benchmark::DoNotOptimize(intersection_tensor(cc).rank());
}
BENCHMARK(BM_IntersectionTensor)->Unit(benchmark::kMillisecond);

void BM_RadicalChain(benchmark::State& state) {
  const auto g = build_from_spec(state.range(0) == 0 ? "example3_2" : "signtwist:5").group;
  const auto cc = two_orbits(g);
  const auto a = centralizer_algebra(cc, intersection_tensor(cc), Field::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(radical_chain(a).dims.size());
}
BENCHMARK(BM_RadicalChain)->Arg(0)->Arg(1);

void BM_RadicalChainPsl2(benchmark::State& state) {
  const auto cc = two_orbits(psl2_496());
  const auto a = centralizer_algebra(cc, intersection_tensor(cc), Field::prime(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(radical_chain(a).dims.size());
}
BENCHMARK(BM_RadicalChainPsl2)->Arg(2)->Arg(3)->Arg(11)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveWitnessSearch(benchmark::State& state) {
  const auto cc = two_orbits(build_affine_counterexample().group);
  const auto a = centralizer_algebra(cc, intersection_tensor(cc), Field::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(is_symmetric(a).status);
}
BENCHMARK(BM_ExhaustiveWitnessSearch);

}  // namespace

BENCHMARK_MAIN();
