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

#include "tesseract/runner.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "tesseract/frame_sampler.h"

using namespace tess;

TrialStats tess::run_plan(const ExperimentPlan &plan, const RunOptions &opt) {
    if (opt.shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    opt.params.validate();
    const Program &program = plan.program;
    NoisyCircuit model = instrument(program.circuit, opt.params);
    FrameSampler sampler(model, opt.seed);

    int workers = opt.threads > 0 ? opt.threads : (int)std::max(1u, std::thread::hardware_concurrency());
    workers = (int)std::min<uint64_t>((uint64_t)workers, (opt.shots + 255) / 256);
    workers = std::max(workers, 1);
    std::vector<TrialStats> parts(workers);
    std::atomic<uint64_t> next{0};
    constexpr uint64_t kChunk = 256;
    auto work = [&](int w) {
        auto scratch = sampler.make_scratch();
        BitVec record(program.circuit.num_measurements());
        TrialStats &t = parts[w];
        while (true) {
            uint64_t begin = next.fetch_add(kChunk);
            if (begin >= opt.shots) {
                break;
            }
            uint64_t end = std::min(opt.shots, begin + kChunk);
            for (uint64_t shot = begin; shot < end; shot++) {
                sampler.sample(opt.seed, shot, scratch, record);
                DecodeResult d = decode(program.plan, record);
                t.trials++;
                switch (d.verdict) {
                    case Verdict::PRE_REJECTED:
                        t.prerejected++;
                        break;
                    case Verdict::POST_REJECTED:
                        t.postrejected++;
                        break;
                    case Verdict::ACCEPTED:
                        t.accepted++;
                        t.errors += d.logical_error;
                        break;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; w++) {
        pool.emplace_back(work, w);
    }
    work(0);
    for (auto &th : pool) {
        th.join();
    }
    TrialStats out;
    out.experiment = plan.name;
    out.basis = plan.basis_str();
    out.seed = opt.seed;
    out.params_hash = opt.params.hash();
    out.confidence = opt.confidence;
    for (const auto &p : parts) {
        out.trials += p.trials;
        out.prerejected += p.prerejected;
        out.postrejected += p.postrejected;
        out.accepted += p.accepted;
        out.errors += p.errors;
    }
    out.finish();
    return out;
}
