#include <benchmark/benchmark.h>

#include "permsim/alpha.hpp"
#include "permsim/characters.hpp"
#include "permsim/cycle_type.hpp"
#include "permsim/field_matrix.hpp"
#include "permsim/recovery.hpp"
#include "permsim/uniting.hpp"

namespace {

using namespace permsim;

void bm_invariant_factors_gf2(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FieldMatrix a = perm_matrix(canonical_representative(CycleType::from_parts(n, {n})),
                              FieldSpec::gf(2));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
}
BENCHMARK(bm_invariant_factors_gf2)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void bm_invariant_factors_rational(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FieldMatrix a = perm_matrix(canonical_representative(CycleType::from_parts(n, {n})),
                              FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(a));
}
BENCHMARK(bm_invariant_factors_rational)->Arg(4)->Arg(8)->Arg(12);

void bm_recover_from_matrix(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CycleType ct = parse_cycle_type(n == 12 ? "[3,4,5]" : "[3^2,6^2,9,12^2]");
  FieldMatrix a = perm_matrix(canonical_representative(ct), FieldSpec::gf(2));
  for (auto _ : state) {
    CycleCountOracle oracle = oracle_from_matrix(a);
    benchmark::DoNotOptimize(recover_cycle_type(oracle));
  }
}
BENCHMARK(bm_recover_from_matrix)->Arg(12)->Arg(51);

void bm_subset_gen_fn(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CycleType ct = CycleType::from_parts(n, std::vector<int>(static_cast<std::size_t>(n / 3), 3));
  for (auto _ : state) benchmark::DoNotOptimize(subset_gen_fn(ct));
}
BENCHMARK(bm_subset_gen_fn)->Arg(30)->Arg(90)->Arg(300);

void bm_scan(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RepresentationSpec spec = RepresentationSpec::tuples(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(find_united_pairs(spec));
}
BENCHMARK(bm_scan)->Arg(8)->Arg(12)->Arg(16);

void bm_alpha_char(benchmark::State& state) {
  InvariantMatrixSet m = InvariantMatrixSet::build(MatrixSetKind::full_gl, 3, 2);
  Permutation pi = Permutation::from_cycles(3, {{1, 2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(alpha_char(m, pi, pi));
}
BENCHMARK(bm_alpha_char);

}  // namespace

BENCHMARK_MAIN();
