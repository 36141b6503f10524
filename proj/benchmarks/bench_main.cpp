#include "qcircle/completion.hpp"
#include "qcircle/pl_aut.hpp"
#include "qcircle/witness.hpp"

#include <benchmark/benchmark.h>

using namespace qcircle;

namespace {

std::vector<RatPoint> sample_points(std::size_t count, const Int& denom) {
  Rng rng(17);
  std::vector<RatPoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, denom));
  return pts;
}

void BM_Between(benchmark::State& state) {
  const auto pts = sample_points(3 * 64, 10000);
  std::size_t i = 0;
  for (auto _ : state) {
    const bool b = between(pts[i], pts[i + 1], pts[i + 2]);
    benchmark::DoNotOptimize(b);
    i = (i + 3) % (3 * 64);
  }
}
BENCHMARK(BM_Between);

void BM_Locate(benchmark::State& state) {
  Rng rng(19);
  const Cycle nu = random_cycle(rng, static_cast<std::size_t>(state.range(0)), 5000);
  const Covering cov(nu, CoveringVariant::cov);
  const auto pts = sample_points(64, 10000);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cov.locate(pts[i]));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_Locate)->Arg(4)->Arg(16)->Arg(64);

void BM_Apply(benchmark::State& state) {
  Rng rng(23);
  const PLAut g = random_aut(rng, static_cast<int>(state.range(0)), 1000);
  const auto pts = sample_points(64, 10000);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g(pts[i]));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_Apply)->Arg(2)->Arg(8)->Arg(32);

void BM_Compose(benchmark::State& state) {
  Rng rng(29);
  const PLAut g = random_aut(rng, static_cast<int>(state.range(0)), 1000);
  const PLAut h = random_aut(rng, static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(compose(g, h));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(8)->Arg(32);

void BM_SupDistance(benchmark::State& state) {
  Rng rng(31);
  const PLAut g = random_aut(rng, static_cast<int>(state.range(0)), 1000);
  const PLAut h = random_aut(rng, static_cast<int>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(sup_distance(g, h));
}
BENCHMARK(BM_SupDistance)->Arg(2)->Arg(8)->Arg(32);

void BM_Extend(benchmark::State& state) {
  Rng rng(37);
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  auto dom = random_distinct_points(rng, k, 720);
  auto img = random_distinct_points(rng, k, 720);
  std::sort(dom.begin(), dom.end());
  std::sort(img.begin(), img.end());
  std::vector<PLAut::Pair> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(dom[i], img[i]);
  for (auto _ : state) benchmark::DoNotOptimize(extend(pairs));
}
BENCHMARK(BM_Extend)->Arg(2)->Arg(8)->Arg(32);

void BM_TransportStage(benchmark::State& state) {
  const IrrPoint u = IrrPoint::quadratic(2, 0, 1);
  const IrrPoint v = IrrPoint::quadratic(3, 0, 1);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const LazyAut t = LazyAut::transport(u, v);
    benchmark::DoNotOptimize(t.stage(depth));
  }
}
BENCHMARK(BM_TransportStage)->Arg(5)->Arg(10)->Arg(20);

void BM_LazyEval(benchmark::State& state) {
  const IrrPoint u = IrrPoint::quadratic(2, 0, 1);
  const IrrPoint v = IrrPoint::quadratic(3, 0, 1);
  const LazyAut t = LazyAut::transport(u, v);
  (void)t.stage(24);  // warm the stage cache
  const auto pts = sample_points(64, 4096);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.eval(pts[i]));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_LazyEval);

}  // namespace

BENCHMARK_MAIN();
