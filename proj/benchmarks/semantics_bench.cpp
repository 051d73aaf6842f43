#include <benchmark/benchmark.h>

#include "teamlogic/normal_form.hpp"
#include "teamlogic/parser.hpp"
#include "teamlogic/random_formula.hpp"
#include "teamlogic/semantics.hpp"

namespace tl = teamlogic;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i + 1));
  return out;
}

// Random XPT formulas of depth 4 on the full team of n variables.
void BM_EvaluateFullTeam(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  tl::FormulaGenerator gen(tl::Fragment::XPT, names(n), 17);
  std::vector<tl::Formula> fs;
  for (int i = 0; i < 32; ++i) fs.push_back(gen.formula(4));
  const tl::Scope scope(names(n));
  const tl::Team full = tl::Team::full(n);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tl::evaluate(scope, full, fs[i++ % fs.size()]));
  }
}
BENCHMARK(BM_EvaluateFullTeam)->DenseRange(2, 4);

void BM_TensorChain(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<tl::Formula> parts;
  for (const std::string& v : names(n)) parts.push_back(tl::Formula::dep({}, tl::Formula::var(v)));
  const tl::Formula f = tl::tensor_all(parts);
  const tl::Scope scope(names(n));
  const tl::Team full = tl::Team::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(tl::evaluate(scope, full, f));
}
BENCHMARK(BM_TensorChain)->DenseRange(1, 3);

void BM_TruthFamily(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  tl::FormulaGenerator gen(tl::Fragment::InqL, names(n), 23);
  const tl::Formula f = gen.formula(5);
  const tl::Scope scope(names(n));
  for (auto _ : state) benchmark::DoNotOptimize(tl::truth_family(f, scope).size());
}
BENCHMARK(BM_TruthFamily)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& state) {
  const tl::Formula f = tl::parse("=(p1, p2) /\\ (p3 || ~p3)");
  for (auto _ : state) benchmark::DoNotOptimize(tl::normal_form(f, tl::Fragment::XPT).components.size());
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMillisecond);

}  // namespace
