#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include <mresr/cr.hpp>
#include <mresr/efrege.hpp>
#include <mresr/mrest.hpp>
#include <mresr/qbf.hpp>
#include <mresr/rule_script.hpp>
#include <mresr/search.hpp>

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(MRESR_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  mresr::Qbf q;
  mresr::MResTProof proof;
};

const Fixture& thirteen_line() {
  static const Fixture f = [] {
    mresr::Qbf q = mresr::parse_qdimacs(slurp("xyuab.qdimacs"));
    return Fixture{q, mresr::replay_mrest(q, mresr::parse_mrt(slurp("xyuab.mrt")))};
  }();
  return f;
}

void BM_CheckMrest(benchmark::State& state) {
  const Fixture& f = thirteen_line();
  for (auto _ : state) benchmark::DoNotOptimize(mresr::check_mrest(f.q, f.proof));
}
BENCHMARK(BM_CheckMrest);

void BM_ReplayAndCheck(benchmark::State& state) {
  const Fixture& f = thirteen_line();
  mresr::RuleScript s = mresr::to_script(f.proof, false);
  for (auto _ : state) {
    auto p = mresr::replay_mrest(f.q, s);
    benchmark::DoNotOptimize(mresr::check_mrest(f.q, p));
  }
}
BENCHMARK(BM_ReplayAndCheck);

void BM_EmitEfrege(benchmark::State& state) {
  const Fixture& f = thirteen_line();
  for (auto _ : state) benchmark::DoNotOptimize(mresr::emit_efrege(f.q, f.proof));
}
BENCHMARK(BM_EmitEfrege);

void BM_CheckEfrege(benchmark::State& state) {
  const Fixture& f = thirteen_line();
  mresr::Certificate cert = mresr::emit_efrege(f.q, f.proof);
  for (auto _ : state) benchmark::DoNotOptimize(mresr::check_efrege(f.q, cert));
  state.counters["lines"] = static_cast<double>(cert.size());
}
BENCHMARK(BM_CheckEfrege);

// Shortest refutation search on the 1x1 completion formula and on the
// formula behind the 7-line fixture.
void BM_SearchCr1(benchmark::State& state) {
  mresr::Qbf q = mresr::gen_cr(1).qbf;
  for (auto _ : state) benchmark::DoNotOptimize(mresr::bounded_search(q, 8));
}
BENCHMARK(BM_SearchCr1);

void BM_SearchXuy(benchmark::State& state) {
  mresr::Qbf q = mresr::parse_qdimacs(slurp("xuy.qdimacs"));
  for (auto _ : state) benchmark::DoNotOptimize(mresr::bounded_search(q, 7));
}
BENCHMARK(BM_SearchXuy);

void BM_SearchCr2(benchmark::State& state) {
  mresr::Qbf q = mresr::gen_cr(2).qbf;
  mresr::SearchOptions o;
  o.max_lines = static_cast<std::size_t>(state.range(0));
  o.node_budget = 2'000'000;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(mresr::bounded_search(q, o));
    } catch (const mresr::ResourceLimitError&) {
      state.SkipWithError("node budget exhausted");
      break;
    }
  }
}
BENCHMARK(BM_SearchCr2)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
