#include <benchmark/benchmark.h>

#include "gdua/pbw.hpp"

using namespace gdua;

namespace {

PresentationPtr rational_pres() {
  return Presentation::create(Poly::h(1), MonomialScalar::from_rational(Rational(2)),
                              MonomialScalar::from_rational(Rational(3)),
                              CycloNumber::zero(1));
}

PresentationPtr cyclotomic_pres() {
  Poly h = Poly::h(1);
  return Presentation::create(h * h + h, MonomialScalar::root_of_unity(12, 1),
                              MonomialScalar::from_rational(Rational(1, 2)),
                              CycloNumber::one(1));
}

// Normal-form growth of (u + h + d)^n, the classic rewriting stress shape.
void bench_sum_power(benchmark::State& state, const PresentationPtr& pres) {
  auto base = AlgebraElement::u(pres) + AlgebraElement::h(pres) +
              AlgebraElement::d(pres);
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(base.pow(n));
  }
}

void bench_sum_power_rational(benchmark::State& state) {
  bench_sum_power(state, rational_pres());
}

void bench_sum_power_cyclotomic(benchmark::State& state) {
  bench_sum_power(state, cyclotomic_pres());
}

void bench_power_identity(benchmark::State& state) {
  auto pres = rational_pres();
  unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_power_identity(pres, k));
  }
}

void bench_q_commutation_z(benchmark::State& state) {
  auto pres = rational_pres();
  // z = u d - h is the normal element with witness g = h.
  auto z = AlgebraElement::u(pres) * AlgebraElement::d(pres) -
           AlgebraElement::from_h_poly(pres, Poly::h(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_commutation_check(z));
  }
}

void bench_v_lambda(benchmark::State& state) {
  auto pres = Presentation::create(Poly::h(1), MonomialScalar::root_of_unity(6, 1),
                                   MonomialScalar::one(), CycloNumber::zero(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_lambda_rep(pres, CycloNumber::one(6), 6));
  }
}

}  // namespace

BENCHMARK(bench_sum_power_rational)->DenseRange(2, 10, 2);
BENCHMARK(bench_sum_power_cyclotomic)->DenseRange(2, 8, 2);
BENCHMARK(bench_power_identity)->DenseRange(1, 9, 2);
BENCHMARK(bench_q_commutation_z);
BENCHMARK(bench_v_lambda);

BENCHMARK_MAIN();
