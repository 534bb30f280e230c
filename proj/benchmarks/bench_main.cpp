#include <benchmark/benchmark.h>

#include "paracat/candidate.hpp"
#include "paracat/demos.hpp"
#include "paracat/diyoneda.hpp"
#include "paracat/fixpoint.hpp"
#include "paracat/freethm.hpp"
#include "paracat/term.hpp"
#include "paracat/tymodel.hpp"

using namespace paracat;

namespace {

DifunctorRef tab(const ExprRef& e, const CategoryRef& base) { return share(eval_difunctor_expr(e, base)); }

ExprRef const_set(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back(std::to_string(i));
  return expr::constant(els);
}

// chain(n) with Hom on both sides
void BM_EnumerateHomChain(benchmark::State& state) {
  auto base = share(fixtures::build("chain(" + std::to_string(state.range(0)) + ")"));
  auto hom = tab(expr::hom(), base);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paranaturals(hom, hom).families.size());
}
BENCHMARK(BM_EnumerateHomChain)->DenseRange(2, 4);

void BM_CheckFormulation(benchmark::State& state) {
  auto base = share(fixtures::build("finset_fragment(2,3)"));
  auto d = tab(expr::arrow(expr::var(), expr::var()), base);
  auto phi = Paranatural::identity(d);
  const auto f = state.range(0) ? Formulation::Pullback : Formulation::Elementwise;
  for (auto _ : state) benchmark::DoNotOptimize(check_paranatural(phi, f).ok);
}
BENCHMARK(BM_CheckFormulation)->Arg(0)->Arg(1);

void BM_StructCategory(benchmark::State& state) {
  auto base = share(fixtures::build("chain(" + std::to_string(state.range(0)) + ")"));
  auto d = eval_difunctor_expr(expr::prod(expr::hom(), const_set(2)), base);
  for (auto _ : state) benchmark::DoNotOptimize(struct_category(d).category->morphism_count());
}
BENCHMARK(BM_StructCategory)->DenseRange(2, 4);

void BM_DiyonedaProbe(benchmark::State& state) {
  auto hom = tab(expr::hom(), share(fixtures::walking_idempotent()));
  for (auto _ : state) benchmark::DoNotOptimize(probe_diyoneda(hom).cells.size());
}
BENCHMARK(BM_DiyonedaProbe);

void BM_Comprehension(benchmark::State& state) {
  auto base = share(fixtures::build("chain(3)"));
  auto gamma = tab(expr::hom(), base);
  auto A = weaken(gamma, share_structs(*gamma), eval_difunctor_expr(const_set(2), base), 2);
  auto delta = tab(const_set(2), base);
  for (auto _ : state) benchmark::DoNotOptimize(probe_comprehension(comprehension(A), delta).bijection());
}
BENCHMARK(BM_Comprehension);

void BM_Adamek(benchmark::State& state) {
  auto T = parse_polyfunctor("1+Id*Id");
  for (auto _ : state) benchmark::DoNotOptimize(adamek_initial(*T, static_cast<int>(state.range(0))).sizes.size());
}
BENCHMARK(BM_Adamek)->Arg(3)->Arg(4);

void BM_StreamCoend(benchmark::State& state) {
  auto sys = demos::streams();
  ExprEvaluator ev(sys.base);
  for (auto _ : state) benchmark::DoNotOptimize(structural_coend(ev, sys.gamma, sys.structures()).classes.size());
}
BENCHMARK(BM_StreamCoend);

void BM_QueueBisim(benchmark::State& state) {
  auto q = demos::queues(2, static_cast<int>(state.range(0)));
  ExprEvaluator ev(q.system.base);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_bisimulation(ev, q.system.gamma, q.representation, q.system.structure(0), q.system.structure(1)).holds);
}
BENCHMARK(BM_QueueBisim)->DenseRange(1, 3);

void BM_SortingFreeTheorem(benchmark::State& state) {
  using namespace freethm;
  auto type = parse_type("forall a. (a*a -> Bool) -> List a -> List a");
  Candidate sort;
  sort.term = parse_term(
      "let rec insert lt x ys = match ys with | [] -> [x] | y :: rest -> if lt (x, y) then x :: y :: rest "
      "else y :: insert lt x rest in let rec sort lt xs = match xs with | [] -> [] | x :: rest -> insert lt x "
      "(sort lt rest) in sort");
  CheckOptions opts;
  opts.sizes = {2};
  opts.list_bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_candidate(*type, sort, opts).ok);
}
BENCHMARK(BM_SortingFreeTheorem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
