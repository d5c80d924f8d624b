#include <gbc/basis.hpp>
#include <gbc/coordinates.hpp>
#include <gbc/corpus.hpp>
#include <gbc/reproduction.hpp>
#include <gbc/suite.hpp>

#include <benchmark/benchmark.h>

using namespace gbc;

namespace {

Polytope shape(int which) {
  switch (which) {
    case 0: return regular_pentagon();
    case 1: return unit_cube();
    case 2: return square_pyramid();
    default: return skewed_hexahedron();
  }
}

void BM_Wachspress(benchmark::State& state) {
  const Polytope p = shape(static_cast<int>(state.range(0)));
  const auto xs = sample_interior(p, 256, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wachspress(p, xs[i++ % xs.size()]));
  }
  state.SetLabel(std::to_string(p.dimension()) + "D v=" + std::to_string(p.num_vertices()));
}
BENCHMARK(BM_Wachspress)->DenseRange(0, 3);

void BM_EvaluateFamily(benchmark::State& state) {
  const Polytope p = unit_cube();
  const BasisSpec spec{Family::Pminus, static_cast<int>(state.range(0))};
  const auto basis = enumerate_basis(p, spec);
  const CoordinateSet cs = wachspress(p, p.vertex_centroid());
  for (auto _ : state) {
    for (const auto& d : basis) benchmark::DoNotOptimize(evaluate(d, cs));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * basis.size()));
}
BENCHMARK(BM_EvaluateFamily)->DenseRange(1, 3);

void BM_Coefficients(benchmark::State& state) {
  const Polytope p = skewed_hexahedron();
  const PolyField target = PolyField::linear(random_matrix(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_for(target, p, {Family::P, 2}));
}
BENCHMARK(BM_Coefficients);

void BM_Suite(benchmark::State& state) {
  const MeshComplex m = build_complex(corpus_entry(state.range(0) == 0 ? "square-pentagon" : "cube-prism").mesh);
  SuiteOptions o;
  o.samples = 50;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(m, o, "bench", ""));
}
BENCHMARK(BM_Suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
