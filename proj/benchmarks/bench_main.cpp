// Copyright 2026 The fibbraid Authors
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

#include <benchmark/benchmark.h>

#include <numbers>

#include "fibbraid/approximator.hpp"
#include "fibbraid/search.hpp"

namespace {

using namespace fibbraid;

void BM_FieldMultiply(benchmark::State &state) {
    const FieldElement a = FieldElement::zeta_power(3) * FieldElement::sqrt_phi_inv() + FieldElement::phi();
    FieldElement b = FieldElement::zeta_power(-1) - FieldElement::sqrt_phi_inv();
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_FieldMultiply);

void BM_ExactProduct5x5(benchmark::State &state) {
    const Representation &rep = standard_representation();
    const ExactMatrix m = rep.evaluate_exact(BraidWord::parse("3 2 1 4 3 2 5 4 3", 6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(m * rep.rho6(3));
    }
}
BENCHMARK(BM_ExactProduct5x5);

void BM_ExactDenseProduct5x5(benchmark::State &state) {
    const Representation &rep = standard_representation();
    const ExactMatrix a = rep.evaluate_exact(BraidWord::parse("3 2 1 4 3 2 5 4 3", 6));
    const ExactMatrix b = rep.evaluate_exact(BraidWord::parse("2 3 4 -1 3 -5", 6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_ExactDenseProduct5x5);

void BM_DedupKey(benchmark::State &state) {
    const ExactMatrix m = standard_representation().evaluate_exact(BraidWord::parse("1 2 4 5 -1 2", 6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dedup_key(m));
    }
}
BENCHMARK(BM_DedupKey);

void BM_FloatSearch(benchmark::State &state) {
    SearchConfig cfg;
    cfg.max_length = static_cast<size_t>(state.range(0));
    uint64_t words = 0;
    for (auto _ : state) {
        const SearchResult r = run_search(cfg);
        words += r.summary.total_visited();
    }
    state.counters["words/s"] = benchmark::Counter(static_cast<double>(words), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_FloatSearch)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IterateStep(benchmark::State &state) {
    FloatMatrix u(2, 2);
    u << 0.8, 0.6, -0.6, 0.8;
    const DiagonalGate d{2 * std::numbers::pi / 5, {1, 0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate_step(u, d));
    }
}
BENCHMARK(BM_IterateStep);

void BM_CompileEntangler(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_entangler());
    }
}
BENCHMARK(BM_CompileEntangler)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
