#include <benchmark/benchmark.h>

#include "yangian/yangian.hpp"

namespace {

using namespace yangian;

void BM_BuildInvariantFourTwo(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto spec = InvariantSpec::four_two(2, s, s, Rational(7, 3));
  for (auto _ : state) benchmark::DoNotOptimize(build_invariant(spec));
}
BENCHMARK(BM_BuildInvariantFourTwo)->DenseRange(1, 3);

void BM_CheckInvariance(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto spec = InvariantSpec::four_two(static_cast<int>(state.range(1)), s, s, Rational(5, 2));
  const auto mono = monodromy_of(spec);
  const auto psi = build_invariant(spec);
  for (auto _ : state) benchmark::DoNotOptimize(check_invariance(mono, psi));
}
BENCHMARK(BM_CheckInvariance)->ArgsProduct({{1, 2}, {2, 3}});

void BM_MonodromyElement(benchmark::State& state) {
  const auto spec = monodromy_of(InvariantSpec::three_one(3, 2, 2, Rational(1, 3)));
  const auto omega = reference_state(spec.reps());
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_element(spec, 1, 3, omega));
}
BENCHMARK(BM_MonodromyElement);

void BM_BetheVector(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto spec = InvariantSpec::four_two(2, s, s, Rational(5, 2));
  const auto mono = monodromy_of(spec);
  const auto roots = catalogue_string_roots(spec);
  for (auto _ : state) benchmark::DoNotOptimize(bethe_vector(mono, roots));
}
BENCHMARK(BM_BetheVector)->DenseRange(1, 3);

void BM_SolveQ(benchmark::State& state) {
  const auto spec = InvariantSpec::four_two(2, 3, 3, Rational(5, 2));
  const auto delta = vacuum_eigenvalues(monodromy_of(spec)).delta();
  for (auto _ : state) benchmark::DoNotOptimize(solve_q(delta, 16));
}
BENCHMARK(BM_SolveQ);

void BM_GrassmannianEval(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto spec = InvariantSpec::four_two(2, s, s, Rational(7, 3));
  for (auto _ : state) benchmark::DoNotOptimize(grassmannian_eval(spec));
}
BENCHMARK(BM_GrassmannianEval)->DenseRange(1, 2);

void BM_LatticeContraction(benchmark::State& state) {
  const auto lat = BaxterLattice::spin_half({{1, 9}, {2, 10}, {3, 8}, {4, 12}, {5, 6}, {7, 11}},
                                            {Rational(1, 3), Rational(1, 2), Rational(1), Rational(5, 3),
                                             Rational(17, 7), Rational(13, 4)});
  const auto alpha = spin_half_labels({1, 2, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2});
  const auto pos = default_positions(lat);
  for (auto _ : state) benchmark::DoNotOptimize(contract_partition_function(lat, alpha, pos));
}
BENCHMARK(BM_LatticeContraction);

void BM_PerimeterFormula(benchmark::State& state) {
  const auto lat = BaxterLattice::spin_half({{1, 9}, {2, 10}, {3, 8}, {4, 12}, {5, 6}, {7, 11}},
                                            {Rational(1, 3), Rational(1, 2), Rational(1), Rational(5, 3),
                                             Rational(17, 7), Rational(13, 4)});
  const std::vector<int> labels{1, 2, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(perimeter_bethe_z(lat, labels));
}
BENCHMARK(BM_PerimeterFormula);

void BM_HoppingYangBaxter(benchmark::State& state) {
  const std::vector<Rational> us{Rational(1, 3)};
  const std::vector<Rational> zs{Rational(5, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe_hopping(2, 2, 2, us, zs));
}
BENCHMARK(BM_HoppingYangBaxter);

}  // namespace
BENCHMARK_MAIN();
