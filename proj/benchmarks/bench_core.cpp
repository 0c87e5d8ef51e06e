// Microbenchmarks for the hot paths: graph bijections, envelope hom
// materialisation, horizontal composition, and the small pentagon sweep.
// Numbers here are for watching regressions, not for absolute claims.

#include <benchmark/benchmark.h>

#include "bip/biprop.hpp"
#include "bip/envelope.hpp"
#include "bip/finord.hpp"
#include "bip/multicat.hpp"

using namespace bip;
using finord::FinMap;

namespace {

void BM_graph_functoriality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long pairs = 0;
    for (int I = 0; I <= n; ++I)
      for (int K = 0; K <= n; ++K)
        for (int L = 0; L <= n; ++L) {
          const long long nf = finord::map_count(I, K);
          const long long nh = finord::map_count(K, L);
          for (long long rf = 0; rf < nf; ++rf)
            for (long long rh = 0; rh < nh; ++rh) {
              benchmark::DoNotOptimize(finord::check_graph_functoriality(
                  FinMap::from_rank(I, K, rf), FinMap::from_rank(K, L, rh)));
              ++pairs;
            }
        }
    state.counters["pairs"] = static_cast<double>(pairs);
  }
}
BENCHMARK(BM_graph_functoriality)->Arg(3)->Arg(4);

void BM_env_hom_build(benchmark::State& state) {
  auto mc = multicat::finite_set_multicat({2}, 2);
  const biprop::Word a{0, 0}, b{0, 0};
  for (auto _ : state) {
    // a fresh envelope each round so the hom is really rebuilt
    auto env = envelope::envelope(mc, 2);
    benchmark::DoNotOptimize(env->hom(a, b)->objects());
  }
}
BENCHMARK(BM_env_hom_build);

void BM_env_compose_eval(benchmark::State& state) {
  auto env = envelope::envelope(multicat::finite_set_multicat({2}, 2), 2);
  const biprop::Word a{0, 0}, b{0, 0}, c{0};
  const int nx = env->hom(a, b)->objects();
  const int ny = env->hom(b, c)->objects();
  int x = 0, y = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(env->compose_obj(a, b, c, x, y));
    if (++x == nx) {
      x = 0;
      if (++y == ny) y = 0;
    }
  }
}
BENCHMARK(BM_env_compose_eval);

void BM_pentagon_check_small(benchmark::State& state) {
  auto env = envelope::envelope(multicat::terminal_multicat(), 2);
  const CheckCaps caps{2, 2, 2};
  for (auto _ : state) {
    auto rep = biprop::check_bicategory(env, caps);
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_pentagon_check_small);

}  // namespace

BENCHMARK_MAIN();
