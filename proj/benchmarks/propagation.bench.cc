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
#include "tesseract/propagation.h"

using namespace tess;

namespace {

void BM_conjugate_through(benchmark::State &state) {
    auto plan = build_plan("path4-enc", Basis::Z);
    const auto &c = plan.program.circuit;
    auto locs = enumerate_fault_locations(c);
    size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjugate_through(c, locs[k++ % locs.size()]));
    }
    state.counters["locations"] = (double)locs.size();
}
BENCHMARK(BM_conjugate_through);

void BM_frame_pass(benchmark::State &state) {
    auto plan = build_plan("cube8-enc", Basis::X);
    const auto &c = plan.program.circuit;
    PauliFrame frame(c.num_qubits());
    BitVec flips(c.num_measurements());
    for (auto _ : state) {
        frame.clear();
        frame.apply(0, 1);
        for (const auto &op : c.ops()) {
            frame.step(op, flips);
        }
        benchmark::DoNotOptimize(flips.words());
    }
    state.SetItemsProcessed((int64_t)(state.iterations() * c.size()));
}
BENCHMARK(BM_frame_pass);

}  // namespace
