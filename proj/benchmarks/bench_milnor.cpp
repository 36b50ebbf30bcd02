#include <benchmark/benchmark.h>

#include "milnor/classify.hpp"
#include "milnor/generators.hpp"
#include "milnor/invariants.hpp"
#include "milnor/magnus.hpp"

using namespace milnor;

static void ExpandCommutator(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  std::vector<Letter> gens;
  for (int i = 1; i <= 4; ++i) gens.push_back(Letter{i, 1});
  const GroupWord w = iterated_commutator(4, gens);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(w, 4, q));
  }
}
BENCHMARK(ExpandCommutator)->DenseRange(2, 6);

static void SeriesProduct(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const TruncatedSeries a = expand(parse_group_word(3, "1 2 -1 3 -2 1 3 3 -1"), 3, q);
  const TruncatedSeries b = expand(parse_group_word(3, "2 3 1 -3 -3 2 -1"), 3, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  state.counters["terms"] = static_cast<double>(a.term_count());
}
BENCHMARK(SeriesProduct)->DenseRange(2, 7);

static void MilnorLinkTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LinkDiagram m = make_milnor_link(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(table(m, n, 1));
  }
}
BENCHMARK(MilnorLinkTable)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void SelfDeltaVectorBench(benchmark::State& state) {
  const LinkDiagram w = whitehead_link();
  const LinkDiagram v = closure(make_V_tau(SurjectionTau{6, 3, 3, {1, 2, 2, 1}}));
  const LinkDiagram& l = state.range(0) == 2 ? w : v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(selfdelta_vector(l));
  }
}
BENCHMARK(SelfDeltaVectorBench)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void CableInvariants(benchmark::State& state) {
  const int max_length = static_cast<int>(state.range(0));
  const std::vector<int> twos{2, 2, 2};
  const LinkDiagram c = cable(make_milnor_link(3), twos).link;
  for (auto _ : state) {
    MilnorEngine e(c);
    e.prepare(max_length, 2);
    benchmark::DoNotOptimize(e.mubar(MultiIndex{1, 3, 5}));
  }
}
BENCHMARK(CableInvariants)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void HomotopyNormalForm(benchmark::State& state) {
  const std::vector<StringLinkDiagram> factors{
      make_V_pi(InjectionPi{3, {1, 2}}), make_V_pi(InjectionPi{3, {1, 2, 3}}, -1),
      make_V_pi(InjectionPi{3, {2, 3}}), make_V_pi(InjectionPi{3, {1, 2, 3}}, -1)};
  const StringLinkDiagram l = stack_all(factors, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(homotopy_normal_form(l));
  }
}
BENCHMARK(HomotopyNormalForm)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
