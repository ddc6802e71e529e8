#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "roughmap/concept_map.hpp"
#include "roughmap/gap_analysis.hpp"
#include "roughmap/report.hpp"

namespace {

// Random recursive tree; the student keeps roughly two thirds of the nodes.
std::pair<roughmap::ConceptMap, roughmap::ConceptMap> make_maps(std::size_t n) {
  std::mt19937 rng(3);
  std::vector<roughmap::RawNode> teacher{{"n0", std::nullopt, std::nullopt}};
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    teacher.push_back({"n" + std::to_string(i), "n" + std::to_string(parent(rng)), std::nullopt});
  }
  std::vector<bool> keep(n, true);
  std::bernoulli_distribution drop(0.33);
  std::vector<roughmap::RawNode> student;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const auto p = std::stoul(teacher[i].parent->substr(1));
      keep[i] = keep[p] && !drop(rng);
    }
    if (keep[i]) student.push_back(teacher[i]);
  }
  return {roughmap::validate_map("bench", teacher), roughmap::validate_map("bench", student)};
}

void BM_IntegrateAnalyze(benchmark::State& state) {
  const auto [teacher, student] = make_maps(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto result = roughmap::analyze(roughmap::integrate(teacher, student), roughmap::LevelsMode::AllLevels);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateAnalyze)->RangeMultiplier(8)->Range(64, 32768);

void BM_RenderJson(benchmark::State& state) {
  const auto [teacher, student] = make_maps(static_cast<std::size_t>(state.range(0)));
  const auto report = roughmap::build_report(
      roughmap::analyze(roughmap::integrate(teacher, student), roughmap::LevelsMode::AllLevels),
      roughmap::SortOrder::Ascending);
  for (auto _ : state) {
    auto text = roughmap::render_report(report, roughmap::ReportFormat::Json);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_RenderJson)->RangeMultiplier(8)->Range(64, 4096);

}  // namespace
BENCHMARK_MAIN();
