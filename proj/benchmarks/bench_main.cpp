#include <benchmark/benchmark.h>

#include "pcid/prover.hpp"
#include "pcid/semantics.hpp"
#include "pcid/textio.hpp"

namespace {

using namespace pcid;

// Chain p1 <- p2 & ~o1, p2 <- p3 & ~o2, ... with a loop at the end, so the
// trace interleaves derive-true and unfounded-set steps.
Definition chain(int n) {
  std::string text = "{ ";
  for (int k = 1; k <= n; ++k) {
    std::string next = k == n ? "p1" : "p" + std::to_string(k + 1);
    text += "p" + std::to_string(k) + " <- " + next + " & ~o" + std::to_string(k) + " | o" +
            std::to_string(k + 1) + ". ";
  }
  return parse_formula(text + "}").definition();
}

Interpretation all_false(const Vocabulary& v) {
  Interpretation i;
  for (const auto& a : v) i.set(a, TruthValue::F);
  return i;
}

void BM_Eval3(benchmark::State& state) {
  Formula f = parse_formula("(a | ~b) & (c | ~(d & e)) & ~(a & b & c) | (d <=> e) | (a => (b => c))");
  Interpretation i;
  int k = 0;
  for (const auto& a : atoms_of(f)) i.set(a, static_cast<TruthValue>(k++ % 3));
  for (auto _ : state) benchmark::DoNotOptimize(eval3(f, i));
}
BENCHMARK(BM_Eval3);

void BM_WfModel(benchmark::State& state) {
  Definition d = chain(static_cast<int>(state.range(0)));
  Interpretation open = all_false(d.open());
  for (auto _ : state) benchmark::DoNotOptimize(wf_model(d, open));
}
BENCHMARK(BM_WfModel)->Arg(4)->Arg(8)->Arg(16);

void BM_IsValid(benchmark::State& state) {
  Definition d = chain(static_cast<int>(state.range(0)));
  Sequent s{{Formula::definition(d)}, {disj(atom("p1"), neg(atom("p1")))}};
  for (auto _ : state) benchmark::DoNotOptimize(is_valid(s));
}
BENCHMARK(BM_IsValid)->Arg(2)->Arg(4)->Arg(6);

void BM_ProveWorkedExample(benchmark::State& state) {
  Sequent s = parse_sequent("o, { p <- o. q <- q & p. } |- p & ~q");
  for (auto _ : state) benchmark::DoNotOptimize(prove(s));
}
BENCHMARK(BM_ProveWorkedExample);

void BM_ProveNonTotal(benchmark::State& state) {
  Sequent s = parse_sequent("{ p <- p & ~q. q <- ~q & r. r <- ~r. } |-");
  for (auto _ : state) benchmark::DoNotOptimize(prove(s));
}
BENCHMARK(BM_ProveNonTotal);

}  // namespace
BENCHMARK_MAIN();
