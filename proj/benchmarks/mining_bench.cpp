/*
   Copyright 2026 The rulelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "rulelab/dataset.hpp"
#include "rulelab/miner.hpp"

namespace {

using namespace rulelab;

const Dataset& synthetic(std::size_t records) {
  static const Dataset small = generate_synthetic({670, 71, 2, 4}, 42);
  static const Dataset full = generate_synthetic({2680, 71, 2, 4}, 42);
  return records == small.n_records() ? small : full;
}

void BM_GenerateSynthetic(benchmark::State& state) {
  const auto records = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_synthetic({records, 71, 2, 4}, 42));
}
BENCHMARK(BM_GenerateSynthetic)->Arg(670)->Arg(2680)->Unit(benchmark::kMillisecond);

void BM_FrequentItemsets(benchmark::State& state) {
  const Dataset& d = synthetic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frequent_itemsets(d, 0.3));
}
BENCHMARK(BM_FrequentItemsets)->Arg(670)->Arg(2680)->Unit(benchmark::kMillisecond);

void BM_MineRules(benchmark::State& state) {
  const Dataset& d = synthetic(2680);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mine(d, {0.3, 0.8}, threads));
}
BENCHMARK(BM_MineRules)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
