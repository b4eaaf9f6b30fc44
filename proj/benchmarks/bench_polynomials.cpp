#include <benchmark/benchmark.h>

#include "ribbonforge/br_poly.hpp"
#include "ribbonforge/corpus.hpp"
#include "ribbonforge/links.hpp"
#include "ribbonforge/medial.hpp"
#include "ribbonforge/transition.hpp"

using namespace ribbonforge;

namespace {

RibbonGraph benchmark_graph(int edges) {
  return random_corpus(edges, 20240517, 1).front();
}

}  // namespace

static void BM_StateSum(benchmark::State& state) {
  RibbonGraph g = benchmark_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_state_sum(g));
  }
}
BENCHMARK(BM_StateSum)->Arg(6)->Arg(8)->Arg(10);

static void BM_DeletionContraction(benchmark::State& state) {
  RibbonGraph g = benchmark_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_delcon(g));
  }
}
BENCHMARK(BM_DeletionContraction)->Arg(6)->Arg(8);

static void BM_TransitionPolynomial(benchmark::State& state) {
  RibbonGraph g = benchmark_graph(static_cast<int>(state.range(0)));
  MedialGraph m = medial(g);
  const VarTable& T = transition_table();
  WeightSystem w = medial_weights(m, LaurentPoly::variable(T, "alpha"), LaurentPoly::variable(T, "beta"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_transition(m, w, "t"));
  }
}
BENCHMARK(BM_TransitionPolynomial)->Arg(6)->Arg(8);

static void BM_Bracket(benchmark::State& state) {
  auto universes = exhaustive_universes(static_cast<int>(state.range(0)));
  const LinkUniverse& u = universes.back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kauffman_bracket(u));
  }
}
BENCHMARK(BM_Bracket)->Arg(3)->Arg(4);

static void BM_BoundaryTrace(benchmark::State& state) {
  RibbonGraph g = benchmark_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.stats(g.full_mask()));
  }
}
BENCHMARK(BM_BoundaryTrace)->Arg(8)->Arg(12);

static void BM_ExhaustiveCorpus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_corpus(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ExhaustiveCorpus)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
