#include <benchmark/benchmark.h>

#include "leib/fp_kernel.hpp"
#include "leib/locality.hpp"
#include "leib/rng.hpp"
#include "leib/series.hpp"
#include "leib/twolocal.hpp"

using namespace leib;

namespace {

const FieldConfig kQ = FieldConfig::rationals();

Vec random_vec(Rng& rng, const FieldConfig& f, std::uint32_t d) {
  Vec v(f, d);
  for (std::uint32_t i = 0; i < d; ++i) v[i] = rng.small_rational();
  return v;
}

void bm_bracket_r0_10(benchmark::State& state) {
  CatalogEntry e = build_r0(10, kQ);
  Rng rng(7);
  const Vec x = random_vec(rng, kQ, 11), y = random_vec(rng, kQ, 11);
  for (auto _ : state) benchmark::DoNotOptimize(e.algebra.bracket(x, y));
}
BENCHMARK(bm_bracket_r0_10);

void bm_check_leibniz_r0_10(benchmark::State& state) {
  CatalogEntry e = build_r0(10, kQ);
  for (auto _ : state) {
    const Algebra& a = e.algebra; // const overload: no cached flag, full scan
    benchmark::DoNotOptimize(check_leibniz(a).ok);
  }
}
BENCHMARK(bm_check_leibniz_r0_10);

void bm_rref_12x12(benchmark::State& state) {
  Rng rng(11);
  Matrix m(kQ, 12, 12);
  for (std::uint32_t i = 0; i < 12; ++i)
    for (std::uint32_t j = 0; j < 12; ++j) m.at(i, j) = rng.small_rational();
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref_12x12);

void bm_aut_matrix_r2_10(benchmark::State& state) {
  const AutParams p = AutParams::r2(Scalar::from_int(2, kQ), Scalar::from_int(-1, kQ),
                                    Scalar::from_int(3, kQ), Scalar::from_int(1, kQ));
  for (auto _ : state) benchmark::DoNotOptimize(aut_matrix(p, 10));
}
BENCHMARK(bm_aut_matrix_r2_10);

void bm_probe_verify_r0_8(benchmark::State& state) {
  const LinearMap t = aut_matrix(AutParams::r0(Scalar::from_int(2, kQ), Scalar::from_int(3, kQ)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(verify_local_via_probes(Family::r0, 8, t).ok());
}
BENCHMARK(bm_probe_verify_r0_8);

void bm_brute_aut_r0_2_f5(benchmark::State& state) {
  CatalogEntry e = build_r0(2, FieldConfig::prime(5));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_aut_bruteforce(e.algebra).size());
}
BENCHMARK(bm_brute_aut_r0_2_f5);

void bm_orbit_table_r0_2_f5(benchmark::State& state) {
  CatalogEntry e = build_r0(2, FieldConfig::prime(5));
  const auto auts = enumerate_aut_bruteforce(e.algebra);
  for (auto _ : state) {
    OrbitTable orbits(5, 3, auts);
    benchmark::DoNotOptimize(orbits.npoints());
  }
}
BENCHMARK(bm_orbit_table_r0_2_f5);

void bm_is_2local_r0_2_f5(benchmark::State& state) {
  const FieldConfig f5 = FieldConfig::prime(5);
  CatalogEntry e = build_r0(2, f5);
  const auto auts = enumerate_aut_bruteforce(e.algebra);
  const FunctionTable tab = FunctionTable::from_fp_map(
      FpMat::from_linear_map(aut_matrix(AutParams::r0(Scalar::from_int(1, f5),
                                                      Scalar::from_int(2, f5)),
                                        2)));
  for (auto _ : state) benchmark::DoNotOptimize(is_2local(tab, auts).ok);
}
BENCHMARK(bm_is_2local_r0_2_f5);

void bm_twolocal_collapse_r1_5_f7(benchmark::State& state) {
  const FieldConfig f7 = FieldConfig::prime(7);
  const FunctionTable tab = FunctionTable::from_fp_map(FpMat::from_linear_map(
      aut_matrix(AutParams::r1(Scalar::from_int(2, f7), Scalar::from_int(1, f7),
                               Scalar::from_int(5, f7)),
                 5)));
  for (auto _ : state)
    benchmark::DoNotOptimize(twolocal_collapse(Family::r1, 5, tab).ok());
}
BENCHMARK(bm_twolocal_collapse_r1_5_f7);

} // namespace

BENCHMARK_MAIN();
