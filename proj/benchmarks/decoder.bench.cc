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

void BM_decode(benchmark::State &state, const char *name) {
    auto plan = build_plan(name, plan_settings(name)[0]);
    auto record = simulate(plan.program.circuit, {}, 1).record;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode(plan.program.plan, record));
    }
}
BENCHMARK_CAPTURE(BM_decode, path4, "path4-enc");
BENCHMARK_CAPTURE(BM_decode, cube8, "cube8-enc");
BENCHMARK_CAPTURE(BM_decode, rep_ec_4, "rep-ec-4");

}  // namespace
