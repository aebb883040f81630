#include <sdist/bounds.hpp>
#include <sdist/families.hpp>
#include <sdist/groebner.hpp>
#include <sdist/hilbert.hpp>
#include <sdist/matrix.hpp>
#include <sdist/parse.hpp>
#include <sdist/search.hpp>
#include <sdist/verify.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace sdist;

Polynomial sphere(std::size_t n, long r) {
  Polynomial f = Polynomial::constant(n, -r);
  for (std::size_t i = 0; i < n; ++i) f = f + Polynomial::variable(n, i) * Polynomial::variable(n, i);
  return f;
}

PointSet cube(std::size_t n) { return generate_family(BoxSpec{std::vector<std::vector<Rational>>(n, {0, 1})}); }

PointSet permutations(long n) {
  PermutationSpec spec;
  for (long i = 1; i <= n; ++i) spec.values.push_back(i);
  return generate_family(spec);
}

void BM_BuchbergerSphereProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<Polynomial> gens{sphere(n, 1) * sphere(n, 4), Polynomial::variable(n, 0) * sphere(n, 9)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, TermOrder::DegLex));
}
BENCHMARK(BM_BuchbergerSphereProduct)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_VanishingIdealPermutations(benchmark::State& state) {
  const PointSet x = permutations(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(x, TermOrder::DegLex));
}
BENCHMARK(BM_VanishingIdealPermutations)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_HilbertFunctionSphere(benchmark::State& state) {
  const std::vector<Polynomial> gens{sphere(4, 1)};
  const auto s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(gens, 4, s));
}
BENCHMARK(BM_HilbertFunctionSphere)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CanonicalInertia(benchmark::State& state) {
  const PointSet x = permutations(state.range(0));
  for (auto _ : state) {
    const RationalMatrix m = canonical_pp_matrix(x);
    benchmark::DoNotOptimize(rank(m));
    benchmark::DoNotOptimize(inertia(SymmetricRationalMatrix(m)));
  }
}
BENCHMARK(BM_CanonicalInertia)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BruteForceCube(benchmark::State& state) {
  const PointSet c = cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max_sdist(c, 2));
}
BENCHMARK(BM_BruteForceCube)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_BoundGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (long n = 2; n <= 12; ++n) {
      for (long s = 1; s <= 12; ++s) {
        benchmark::DoNotOptimize(sphere_union_bound(n, 2, s));
        benchmark::DoNotOptimize(box_bound(n, 3, s));
        benchmark::DoNotOptimize(permutation_bound(n, s));
      }
    }
  }
}
BENCHMARK(BM_BoundGrid);

}  // namespace

BENCHMARK_MAIN();
