#include <benchmark/benchmark.h>

#include "profab/oracle.hpp"
#include "profab/reducibility.hpp"

using namespace profab;

namespace {

// Three variables over two letters with no solution modulo even n (2x = 2y + z, z odd),
// so the whole assignment space is scanned.
SystemDocument search_document() {
  return parse_system_document(R"({"pi": "2^inf, 3^inf, 5^inf; default=0", "alphabet": ["a", "b"],
      "variables": ["x", "y", "z"], "equations": ["x*x = y*y*z"],
      "constraints": {"x": "(0,0)+(1,0)N+(0,1)N", "y": "(0,0)+(1,0)N+(0,1)N", "z": "(1,1)+(2,0)N+(0,2)N"}})");
}

// Many branch combinations, none solvable: every combination is attempted.
SystemDocument branch_document() {
  std::string branches;
  for (int k = 0; k < 12; ++k) branches += (k ? " | " : "") + std::to_string(2 * k + 1) + "+2N";
  return parse_system_document(R"({"pi": "2^inf, 3^1, 5^1, 7^1; default=0", "alphabet": ["a"],
      "variables": ["x", "y", "z"], "equations": ["x = y*y*z*z"],
      "constraints": {"x": ")" + branches + R"(", "y": ")" + branches + R"(", "z": "1 | 3 | 5"}})");
}

void BM_SearchSerial(benchmark::State& state) {
  const SystemDocument doc = search_document();
  const Integer n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::search_quotient_serial(doc.system, n, doc.pi));
}

void BM_SearchParallel(benchmark::State& state) {
  const SystemDocument doc = search_document();
  const Integer n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::search_quotient(doc.system, n, doc.pi));
}

void BM_ReduceSerial(benchmark::State& state) {
  const SystemDocument doc = branch_document();
  for (auto _ : state) benchmark::DoNotOptimize(decide_and_witness(doc.pi, doc.system, Execution::serial));
}

void BM_ReduceParallel(benchmark::State& state) {
  const SystemDocument doc = branch_document();
  for (auto _ : state) benchmark::DoNotOptimize(decide_and_witness(doc.pi, doc.system, Execution::parallel));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchParallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReduceSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReduceParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
