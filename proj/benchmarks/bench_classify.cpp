#include <benchmark/benchmark.h>

#include "gdua/classify.hpp"
#include "gdua/conformal.hpp"

#include <vector>

using namespace gdua;

namespace {

std::vector<Presentation> sample_presentations() {
  Poly h = Poly::h(1);
  Poly one = Poly::constant(Rational(1));
  auto m = [](long long n) { return MonomialScalar::from_rational(Rational(n)); };
  auto z = [](unsigned n) { return MonomialScalar::root_of_unity(n, 1); };
  CycloNumber zero = CycloNumber::zero(1);
  CycloNumber g1 = CycloNumber::one(1);
  return {
      Presentation(h, MonomialScalar::one(), MonomialScalar::one(), g1),
      Presentation(h, m(2), m(3), zero),
      Presentation(h * h + h, z(3), m(2), g1),
      Presentation((h - one) * (h - one), z(4), z(6), zero),
      Presentation(Poly::zero(1), m(2), m(-2), zero),
      Presentation(h, z(6), MonomialScalar::one(), zero),
      Presentation(h * (h - one), m(2), m(2), zero),
      Presentation(one, m(8), m(4), zero),
  };
}

void bench_classify(benchmark::State& state) {
  auto presentations = sample_presentations();
  for (auto _ : state) {
    for (const auto& p : presentations) {
      benchmark::DoNotOptimize(classify(p));
    }
  }
}

void bench_classify_by_regime(benchmark::State& state) {
  auto presentations = sample_presentations();
  for (auto _ : state) {
    for (const auto& p : presentations) {
      benchmark::DoNotOptimize(classify_by_regime(p));
    }
  }
}

void bench_group_structure(benchmark::State& state) {
  auto r = MonomialScalar::make(Rational(2), 3, 1);   // 2*zeta(3)
  auto s = MonomialScalar::make(Rational(1, 2), 4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_structure(r, s));
  }
}

void bench_conformal_witness(benchmark::State& state) {
  Poly h = Poly::h(1);
  Poly f = (h - Poly::constant(Rational(1))) * (h - Poly::constant(Rational(1))) * h;
  auto r = MonomialScalar::from_rational(Rational(2));
  auto s = MonomialScalar::from_rational(Rational(3));
  CycloNumber gamma = CycloNumber::one(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conformal_witness(f, r, s, gamma));
  }
}

}  // namespace

BENCHMARK(bench_classify);
BENCHMARK(bench_classify_by_regime);
BENCHMARK(bench_group_structure);
BENCHMARK(bench_conformal_witness);

BENCHMARK_MAIN();
