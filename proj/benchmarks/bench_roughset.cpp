#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "roughmap/roughset.hpp"

namespace {

struct Fixture {
  roughmap::ApproximationSpace space;
  std::vector<std::string> subset;
};

Fixture make_fixture(std::size_t n, std::size_t block_size) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  roughmap::Partition partition;
  for (std::size_t i = 0; i < n; i += block_size) {
    partition.blocks.emplace_back(ids.begin() + static_cast<std::ptrdiff_t>(i),
                                  ids.begin() + static_cast<std::ptrdiff_t>(std::min(n, i + block_size)));
  }
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.6);
  std::vector<std::string> subset;
  for (const auto& id : ids) {
    if (coin(rng)) subset.push_back(id);
  }
  return {roughmap::ApproximationSpace(roughmap::Universe(ids), std::move(partition)), std::move(subset)};
}

void BM_Regions(benchmark::State& state) {
  const auto fx = make_fixture(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    auto r = fx.space.regions(fx.subset);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Regions)->RangeMultiplier(8)->Range(64, 32768);

void BM_Indiscernibility(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> values;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("o" + std::to_string(i));
    values.push_back({std::to_string(pick(rng)), std::to_string(pick(rng)), std::to_string(pick(rng))});
  }
  const roughmap::DecisionTable table(roughmap::Universe(objects), {"a", "b", "d"}, values, {"a", "b"}, {"d"});
  const std::vector<std::string> p = {"a", "b"};
  for (auto _ : state) {
    auto partition = roughmap::indiscernibility(table, p);
    benchmark::DoNotOptimize(partition);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Indiscernibility)->RangeMultiplier(8)->Range(64, 32768);

}  // namespace
