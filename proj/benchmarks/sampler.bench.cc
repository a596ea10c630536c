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
#include "tesseract/frame_sampler.h"
#include "tesseract/noise.h"
#include "tesseract/runner.h"

using namespace tess;

namespace {

void BM_path4_shot(benchmark::State &state) {
    auto plan = build_plan("path4-enc", Basis::X);
    auto model = instrument(plan.program.circuit, NoiseParams::h2());
    FrameSampler sampler(model, 1);
    auto scratch = sampler.make_scratch();
    BitVec record(plan.program.circuit.num_measurements());
    uint64_t shot = 0;
    for (auto _ : state) {
        sampler.sample(1, shot++, scratch, record);
        benchmark::DoNotOptimize(decode(plan.program.plan, record));
    }
    state.SetItemsProcessed((int64_t)state.iterations());
}
BENCHMARK(BM_path4_shot);

void BM_run_plan(benchmark::State &state, const char *name) {
    auto plan = build_plan(name, plan_settings(name)[0]);
    RunOptions opt;
    opt.shots = 10000;
    opt.threads = 1;
    opt.params = NoiseParams::h2();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_plan(plan, opt));
        opt.seed++;
    }
    state.SetItemsProcessed((int64_t)(state.iterations() * opt.shots));
}
BENCHMARK_CAPTURE(BM_run_plan, path4, "path4-enc")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_run_plan, cube8, "cube8-enc")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_run_plan, cat12, "cat12-enc")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_run_plan, rep_ec_4, "rep-ec-4")->Unit(benchmark::kMillisecond);

void BM_sample_faults(benchmark::State &state) {
    auto plan = build_plan("cube8-enc", Basis::Z);
    auto model = instrument(plan.program.circuit, NoiseParams::h2());
    std::vector<FaultEvent> out;
    uint64_t shot = 0;
    for (auto _ : state) {
        model.sample_faults(1, shot++, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["sites"] = (double)model.sites().size();
}
BENCHMARK(BM_sample_faults);

}  // namespace

BENCHMARK_MAIN();
