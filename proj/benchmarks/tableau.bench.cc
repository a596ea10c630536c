// Copyright 2026 The Tesseract Lab Authors
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

#include "benchmark/benchmark.h"
#include "tesseract/experiments.h"
#include "tesseract/tableau.h"

using namespace tess;

namespace {

void BM_tableau_cnot(benchmark::State &state) {
    size_t n = (size_t)state.range(0);
    TableauSimulator sim(n);
    size_t k = 0;
    for (auto _ : state) {
        sim.cnot(k % n, (k + 1) % n);
        sim.h(k % n);
        k++;
    }
    state.SetItemsProcessed((int64_t)state.iterations() * 2);
}
BENCHMARK(BM_tableau_cnot)->Arg(18)->Arg(64)->Arg(256);

void BM_tableau_measure(benchmark::State &state) {
    size_t n = (size_t)state.range(0);
    TableauSimulator sim(n);
    for (size_t q = 0; q < n; q++) {
        sim.h(q);
    }
    for (size_t q = 0; q + 1 < n; q++) {
        sim.cnot(q, q + 1);
    }
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim.measure_x(k % n, k & 1));
        k++;
    }
}
BENCHMARK(BM_tableau_measure)->Arg(18)->Arg(64);

void BM_simulate_plan(benchmark::State &state, const char *name) {
    auto plan = build_plan(name, plan_settings(name)[0]);
    uint64_t shot = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(plan.program.circuit, {}, 1, shot++));
    }
}
BENCHMARK_CAPTURE(BM_simulate_plan, path4, "path4-enc");
BENCHMARK_CAPTURE(BM_simulate_plan, cat12, "cat12-enc");

}  // namespace
