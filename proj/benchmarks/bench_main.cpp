#include <benchmark/benchmark.h>

#include "hwprobe/tate.hpp"

using namespace hwprobe;

namespace {

PolyRingPtr ring(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights = {}) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(names), std::move(weights));
}

std::vector<Poly> polys(const PolyRing& s, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(parsePoly(s, t));
  return out;
}

// Twisted cubic style ideal with a growing number of variables.
void BM_Buchberger(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  auto s = ring(32003, names);
  FreeModule f(s, {0});
  std::vector<Vec> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Poly g = s->sub(s->mul(s->var(i), s->var(i + 2)), s->mul(s->var(i + 1), s->var(i + 1)));
    gens.push_back(f.fromColumn(std::span<const Poly>(&g, 1)));
  }
  for (int i = 0; i + 3 < n; ++i) {
    Poly g = s->sub(s->mul(s->var(i), s->var(i + 3)), s->mul(s->var(i + 1), s->var(i + 2)));
    gens.push_back(f.fromColumn(std::span<const Poly>(&g, 1)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(f, gens));
}
BENCHMARK(BM_Buchberger)->DenseRange(4, 7);

void BM_ResolutionA1Threefold(benchmark::State& state) {
  auto s = ring(101, {"x", "y", "z", "w"});
  auto r = QuotientRing::create(s, polys(*s, {"x*w - y*z"}), true);
  for (auto _ : state) {
    auto m = PresentedModule::quotient(r, polys(*s, {"x", "z"}));
    benchmark::DoNotOptimize(minimalFreeResolution(m, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ResolutionA1Threefold)->Arg(4)->Arg(8)->Arg(12);

void BM_ResolutionGasharovPeeva(benchmark::State& state) {
  auto s = ring(5, {"x1", "x2", "x3", "x4"});
  auto r = QuotientRing::create(
      s, polys(*s, {"x1^2", "x2^2", "x3^2", "x4^2", "x3*x4", "x1*x4 + x2*x4", "2*x1*x3 + x2*x3"}));
  Matrix d(s, {0, 0}, {1, 1});
  d.set(0, 0, parsePoly(*s, "x1"));
  d.set(0, 1, parsePoly(*s, "2*x3 + x4"));
  d.set(1, 1, parsePoly(*s, "x2"));
  for (auto _ : state) {
    auto n = PresentedModule::present(r, d);
    benchmark::DoNotOptimize(minimalFreeResolution(n, 8));
  }
}
BENCHMARK(BM_ResolutionGasharovPeeva);

void BM_Theta(benchmark::State& state) {
  auto s = ring(101, {"x", "y", "z", "w"});
  auto r = QuotientRing::create(s, polys(*s, {"x*w - y*z"}), true);
  for (auto _ : state) {
    auto m = PresentedModule::quotient(r, polys(*s, {"x", "z"}));
    auto n = PresentedModule::quotient(r, polys(*s, {"x", "y"}));
    benchmark::DoNotOptimize(theta(m, n));
  }
}
BENCHMARK(BM_Theta);

void BM_HwCheckCusp(benchmark::State& state) {
  auto s = ring(7, {"x", "y"}, {3, 2});
  auto r = QuotientRing::create(s, polys(*s, {"x^2 - y^3"}), true);
  for (auto _ : state) {
    auto m = syzygyModule(PresentedModule::quotient(r, polys(*s, {"x", "y"})), 1);
    benchmark::DoNotOptimize(hwCheck(m));
  }
}
BENCHMARK(BM_HwCheckCusp);

}  // namespace
BENCHMARK_MAIN();
