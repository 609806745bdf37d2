#include <benchmark/benchmark.h>

#include <random>

#include "mtdual/duals.hpp"
#include "mtdual/oracle.hpp"

using namespace mtdual;

namespace {

FieldPtr f16() { return GaloisField::create(2, {1, 1, 0, 0, 1}, std::vector<std::uint32_t>{0, 1, 0, 0}); }

MTCode f16_code() {
  auto F = f16();
  auto P = [&](const char* s) { return Poly::parse(F, s); };
  std::vector<PolyVector> rows{{P("g^5 + g^10*x + x^2"), Poly(F), P("g^2 + g^7*x + g^12*x^2 + g^2*x^3")},
                               {Poly(F), P("1"), P("1 + g*x + g^5*x^2 + g^2*x^3")},
                               {Poly(F), Poly(F), P("g^10 + x^4")}};
  const auto t = F->power_of_generator(10);
  return MTCode::from_generator_rows(F, rows, {F->one(), t, t}, {3, 4, 4});
}

PolyMatrix random_matrix(const FieldPtr& F, std::size_t n, int bound, std::mt19937_64& rng) {
  PolyMatrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> c;
      for (int k = 0; k < bound; ++k) c.push_back(static_cast<std::uint32_t>(rng() % F->order()));
      m.at(i, j) = Poly(F, std::move(c));
    }
  return m;
}

void BM_FieldMul(benchmark::State& state) {
  auto F = GaloisField::create(3, {2, 1, 0, 0, 1});
  std::uint32_t a = 5, b = 7;
  for (auto _ : state) {
    a = F->mul(a, b) + 1;
    if (a >= F->order()) a = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_PolyMul(benchmark::State& state) {
  auto F = f16();
  std::mt19937_64 rng(1);
  const PolyMatrix m = random_matrix(F, 2, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(m.at(0, 0) * m.at(1, 1));
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

void BM_HermiteNormalForm(benchmark::State& state) {
  auto F = GaloisField::prime(3);
  std::mt19937_64 rng(2);
  const PolyMatrix m = random_matrix(F, static_cast<std::size_t>(state.range(0)), 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_EuclideanDual(benchmark::State& state) {
  const MTCode c = f16_code();
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_dual(c));
}
BENCHMARK(BM_EuclideanDual);

void BM_TwoSidedDual(benchmark::State& state) {
  const MTCode c = f16_code();
  for (auto _ : state) benchmark::DoNotOptimize(two_sided_galois_dual(c, 3));
}
BENCHMARK(BM_TwoSidedDual);

void BM_OracleExpandAndDual(benchmark::State& state) {
  const MTCode c = f16_code();
  for (auto _ : state) {
    const auto ex = oracle::expand(c);
    benchmark::DoNotOptimize(oracle::nullspace_dual(ex, 3, oracle::DualSide::right));
  }
}
BENCHMARK(BM_OracleExpandAndDual);

void BM_MinDistance(benchmark::State& state) {
  const auto ex = oracle::expand(f16_code());
  for (auto _ : state) benchmark::DoNotOptimize(oracle::min_distance(ex));
}
BENCHMARK(BM_MinDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
