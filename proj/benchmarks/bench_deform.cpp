#include <benchmark/benchmark.h>

#include "dgm/deform.hpp"
#include "dgm/family.hpp"
#include "dgm/series.hpp"

using namespace dgm;

namespace {

FieldSpec field_of(int64_t code) { return code == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(code)); }

void BM_VerifyPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FieldSpec f = field_of(state.range(1));
  for (auto _ : state) {
    auto report = family::verify_polynomial_deformation(n, std::nullopt, f);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyPolynomial)->ArgsProduct({{2, 4, 8}, {0, 5}})->Unit(benchmark::kMillisecond);

void BM_VerifyObstructed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = family::verify_obstructed_approximation(n, std::nullopt, FieldSpec::rationals());
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyObstructed)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state) {
  const DgModule base = family::base_complex(static_cast<int>(state.range(0)), FieldSpec::rationals());
  const HomComplex h(base);
  for (auto _ : state) {
    auto r = h.cohomology(1);
    benchmark::DoNotOptimize(r);
  }
  state.counters["dim_C1"] = static_cast<double>(h.basis(1).size());
}
BENCHMARK(BM_Cohomology)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_SeriesInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const DgModule base = family::base_complex(12, FieldSpec::rationals());
  const auto& v = base.module();
  MapSeries a = MapSeries::identity(v, order);
  for (int k = 1; k <= order; ++k) {
    GradedMap m = GradedMap::zero(v, v, 0);
    for (std::size_t j = 0; j + 1 < v->dimension(); j += 2) {
      m.add_entry(j, j + 1, Scalar::make(FieldSpec::rationals(), k, static_cast<long>(j) + 1));
    }
    a.set_coeff(k, m);
  }
  for (auto _ : state) {
    auto inv = series_inverse(a);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_SeriesInverse)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_InfiniteStepper(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const DgModule base = family::base_complex(3 * order + 3, FieldSpec::rationals());
  const GradedMap d1 = family::closed_form_lift(base, 0, 1);
  const auto strategy = LiftStrategy::with_cocycles(d1, family::infinite_cocycles(base, order));
  for (auto _ : state) {
    auto report = deform_to_order(base, strategy, order);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_InfiniteStepper)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
