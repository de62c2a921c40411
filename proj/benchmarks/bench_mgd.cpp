#include <benchmark/benchmark.h>

#include "mgd/bracket.hpp"
#include "mgd/canonical.hpp"
#include "mgd/certify.hpp"
#include "mgd/moves.hpp"
#include "mgd/resolve.hpp"
#include "mgd/text_format.hpp"

namespace {

const char* kFigureEight = "X+(4,2,5,1) X+(8,6,1,5) X+(6,3,7,4) X+(2,7,3,8)\n";
const char* kMarkedTrefoil = "M(1,4,2,5) X+(3,6,4,1) X+(5,2,6,3)\n";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::parse(kFigureEight));
  }
}
BENCHMARK(BM_Parse);

void BM_CanonicalCode(benchmark::State& state) {
  const mgd::Diagram d = mgd::parse(kFigureEight);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::canonical_code(d));
  }
}
BENCHMARK(BM_CanonicalCode);

void BM_Resolve(benchmark::State& state) {
  const mgd::Diagram d = mgd::parse(kMarkedTrefoil);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::resolve(d, mgd::Side::kMinus));
  }
}
BENCHMARK(BM_Resolve);

void BM_Bracket(benchmark::State& state) {
  const mgd::Diagram d = mgd::parse(kFigureEight);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::kauffman_bracket(d));
  }
}
BENCHMARK(BM_Bracket);

void BM_EnumerateSitesR2(benchmark::State& state) {
  const mgd::Diagram d = mgd::parse(kFigureEight);
  const int rule = *mgd::rule_index("omega2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mgd::enumerate_sites_structural(d, rule, mgd::MoveDir::kForward));
  }
}
BENCHMARK(BM_EnumerateSitesR2);

void BM_CertifyHopf(benchmark::State& state) {
  const mgd::Diagram d = mgd::parse("X+(1,3,2,4) X+(3,1,4,2) O(5)\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mgd::certify_h_trivial(d));
  }
}
BENCHMARK(BM_CertifyHopf);

}  // namespace

BENCHMARK_MAIN();
