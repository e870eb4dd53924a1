// Copyright 2026 The qdconcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "benchmark/benchmark.h"
#include "qdconcat/analytic.h"
#include "qdconcat/concat.h"
#include "qdconcat/mc.h"
#include "qdconcat/pauli.h"

using namespace qdc;

static void pauli_multiply(benchmark::State &state) {
    std::mt19937_64 rng(1);
    size_t n = static_cast<size_t>(state.range(0));
    uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    PauliString a(n, rng() & mask, rng() & mask);
    PauliString b(n, rng() & mask, rng() & mask);
    for (auto _ : state) {
        a = multiply(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(pauli_multiply)->Arg(6)->Arg(10)->Arg(64);

static void pauli_commutes(benchmark::State &state) {
    auto a = PauliString::parse("XZZXIIXZZX");
    auto b = PauliString::parse("ZXIXZZXIXZ");
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutes(a, b));
    }
}
BENCHMARK(pauli_commutes);

static void build_concatenated_code(benchmark::State &state) {
    auto code = all_code_ids()[static_cast<size_t>(state.range(0))];
    state.SetLabel(std::string(code_id_name(code)));
    for (auto _ : state) {
        auto cc = ConcatenatedCode::build(standard_spec(code));
        benchmark::DoNotOptimize(cc.decoder.size());
    }
}
BENCHMARK(build_concatenated_code)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void equivalence_sets(benchmark::State &state) {
    auto spec = standard_spec(all_code_ids()[static_cast<size_t>(state.range(0))]);
    for (auto _ : state) {
        auto cls = equivalence_classes(spec);
        benchmark::DoNotOptimize(cls.total());
    }
}
BENCHMARK(equivalence_sets)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void monte_carlo_shots(benchmark::State &state) {
    auto code = all_code_ids()[static_cast<size_t>(state.range(0))];
    auto cc = ConcatenatedCode::build(standard_spec(code));
    SampleConfig config{NoiseModel::make(0.1, 0.5, cc.spec.alphabet), cc.spec};
    config.shots = kShardShots;
    config.threads = 1;
    state.SetLabel(std::string(code_id_name(code)));
    for (auto _ : state) {
        auto est = estimate_pf(config, cc);
        benchmark::DoNotOptimize(est.failures);
        config.seed++;
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * config.shots));
}
BENCHMARK(monte_carlo_shots)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void pseudothreshold_scan(benchmark::State &state) {
    auto code = all_code_ids()[static_cast<size_t>(state.range(0))];
    Variant v = table_variant(code);
    for (auto _ : state) {
        auto t = pseudothreshold([&](double p) { return concat_code_pf(code, 0, p, v); });
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(pseudothreshold_scan)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
