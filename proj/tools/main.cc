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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tesseract/experiments.h"
#include "tesseract/report.h"
#include "tesseract/runner.h"
#include "tesseract/targets.h"
#include "tesseract/verifier.h"

using namespace tess;

namespace {

enum ExitCode {
    EXIT_OK = 0,
    EXIT_USAGE = 1,
    EXIT_VERIFICATION_FAILED = 2,
    EXIT_REJECTION_BUDGET = 3,
    EXIT_BUDGET_EXCEEDED = 4,
};

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// Accepts a JSON file, inline JSON, or a preset ("h2", "zero") optionally followed by key=value
/// overrides. A bare override list starts from the H2 preset.
NoiseParams parse_noise(const std::string &text) {
    if (text.empty()) {
        return NoiseParams::h2();
    }
    if (text.front() == '{') {
        return NoiseParams::from_json(text);
    }
    if (std::ifstream(text).good()) {
        return NoiseParams::from_json(read_file(text));
    }
    std::string head = text.substr(0, text.find(','));
    std::string rest = head.size() < text.size() ? text.substr(head.size() + 1) : "";
    if (head == "h2") {
        return NoiseParams::h2().with_overrides(rest);
    }
    if (head == "zero") {
        return NoiseParams::zero().with_overrides(rest);
    }
    return NoiseParams::h2().with_overrides(text);
}

std::vector<std::optional<Basis>> settings_for(const std::string &plan, const std::string &basis) {
    auto all = plan_settings(plan);
    if (basis.empty() || basis == "all") {
        return all;
    }
    if (basis != "X" && basis != "Z") {
        throw std::invalid_argument("basis must be X, Z or all");
    }
    Basis b = basis == "X" ? Basis::X : Basis::Z;
    if (all.size() == 1 && !all[0].has_value()) {
        throw std::invalid_argument("plan '" + plan + "' has a single setting; omit --basis");
    }
    return {b};
}

Flavor parse_flavor(const std::string &s) {
    if (s == "one_flag") {
        return Flavor::ONE_FLAG;
    }
    if (s == "two_flag") {
        return Flavor::TWO_FLAG;
    }
    throw std::invalid_argument("flavor must be one_flag or two_flag");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Tesseract code experiment lab"};
    app.require_subcommand(1);

    // run
    auto *run = app.add_subcommand("run", "Monte Carlo campaign for a plan (or 'all')");
    std::string run_plan_name, run_basis, run_noise, run_out, run_format = "table", run_flavor = "one_flag";
    uint64_t run_shots = 0, run_seed = 1;
    int run_threads = 0, run_rounds = 5;
    double run_max_reject = 1.0, run_confidence = 0.683;
    run->add_option("plan", run_plan_name, "Plan name or 'all'")->required();
    run->add_option("--shots", run_shots, "Shots per setting (default 20000 encoded, 100000 baseline)");
    run->add_option("--seed", run_seed, "Base seed");
    run->add_option("--basis", run_basis, "X, Z or all (default all settings)");
    run->add_option("--noise", run_noise, "JSON file, inline JSON, preset (h2, zero) and/or key=value overrides");
    run->add_option("--threads", run_threads, "Worker threads (0 = hardware concurrency)");
    run->add_option("--rounds", run_rounds, "Rounds of the repeated EC and teleport plans")->check(CLI::Range(1, 1000));
    run->add_option("--flavor", run_flavor, "Logical measurement flavor: one_flag or two_flag");
    run->add_option("--confidence", run_confidence, "Two-sided confidence level of the interval");
    run->add_option("--max-reject-rate", run_max_reject, "Exit nonzero if the rejected fraction exceeds this");
    run->add_option("--out", run_out, "Write the report to this file instead of stdout");
    run->add_option("--format", run_format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));

    // verify
    auto *verify = app.add_subcommand("verify", "Exhaustive or sampled fault injection on a target or plan");
    std::string ver_name, ver_basis;
    int ver_order = 1, ver_threads = 0;
    uint64_t ver_sample = 0, ver_seed = 1, ver_max_loc = 4000;
    verify->add_option("target", ver_name, "Verification target, plan name, or 'list'")->required();
    verify->add_option("--order", ver_order, "Number of simultaneous faults")->check(CLI::IsMember({1, 2}));
    verify->add_option("--basis", ver_basis, "Setting when the target is a plan");
    verify->add_option("--sample", ver_sample, "Order 2: number of sampled pairs (0 = exhaustive)");
    verify->add_option("--seed", ver_seed, "Seed for sampled pairs");
    verify->add_option("--threads", ver_threads, "Worker threads");
    verify->add_option("--max-locations", ver_max_loc, "Refuse exhaustive order 2 above this many locations");

    // export-circuit
    auto *exp = app.add_subcommand("export-circuit", "Print the scheduled circuit of a plan");
    std::string exp_name, exp_basis, exp_out;
    int exp_rounds = 5;
    exp->add_option("plan", exp_name, "Plan name")->required();
    exp->add_option("--basis", exp_basis, "Setting (X or Z) for two-setting plans");
    exp->add_option("--rounds", exp_rounds, "Rounds of the repeated EC and teleport plans")->check(CLI::Range(1, 1000));
    exp->add_option("--out", exp_out, "Output file");

    // list
    auto *list = app.add_subcommand("list", "List plans and verification targets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            std::cout << "plans:\n";
            for (const auto &n : plan_names()) {
                std::cout << "  " << n << "\n";
            }
            std::cout << "targets:\n";
            for (const auto &n : target_names()) {
                std::cout << "  " << n << "\n";
            }
            return EXIT_OK;
        }

        if (*run) {
            RunOptions opt;
            opt.seed = run_seed;
            opt.threads = run_threads;
            opt.params = parse_noise(run_noise);
            opt.confidence = run_confidence;
            PlanOptions po;
            po.rounds = run_rounds;
            po.flavor = parse_flavor(run_flavor);
            std::vector<std::string> names;
            if (run_plan_name == "all") {
                names = plan_names();
            } else {
                names.push_back(run_plan_name);
            }
            std::vector<TrialStats> rows;
            bool over_budget = false;
            for (const auto &name : names) {
                for (auto b : settings_for(name, run_plan_name == "all" ? "" : run_basis)) {
                    ExperimentPlan plan = build_plan(name, b, po);
                    opt.shots = run_shots > 0 ? run_shots : (plan.encoded ? 20000 : 100000);
                    TrialStats t = run_plan(plan, opt);
                    double rejected = (double)(t.prerejected + t.postrejected) / (double)t.trials;
                    if (rejected > run_max_reject) {
                        std::cerr << name << " " << t.basis << ": rejected fraction " << rejected
                                  << " exceeds the budget " << run_max_reject << "\n";
                        over_budget = true;
                    }
                    rows.push_back(t);
                }
            }
            auto format = parse_report_format(run_format);
            if (run_out.empty()) {
                std::cout << emit_report(rows, format);
            } else {
                write_report(rows, format, run_out);
            }
            return over_budget ? EXIT_REJECTION_BUDGET : EXIT_OK;
        }

        if (*verify) {
            if (ver_name == "list") {
                for (const auto &n : target_names()) {
                    std::cout << n << "\n";
                }
                return EXIT_OK;
            }
            VerifyOptions vo;
            vo.order = ver_order;
            vo.sample_pairs = ver_sample;
            vo.seed = ver_seed;
            vo.threads = ver_threads;
            vo.max_locations = ver_max_loc;
            const auto &plans = plan_names();
            std::vector<std::pair<std::string, Tally>> results;
            if (std::find(plans.begin(), plans.end(), ver_name) != plans.end()) {
                for (auto b : settings_for(ver_name, ver_basis)) {
                    ExperimentPlan plan = build_plan(ver_name, b);
                    results.push_back({plan.name + "/" + plan.basis_str(), enumerate_faults(plan.program, vo)});
                }
            } else {
                VerificationTarget t = build_target(ver_name);
                vo.regions = t.fault_regions;
                results.push_back({t.name, enumerate_faults(t.program, vo)});
            }
            bool failed = false;
            for (const auto &[name, tally] : results) {
                std::cout << "{\"target\": \"" << name << "\", \"tally\": " << tally.to_json() << "}\n";
                uint64_t errors = tally.counts[(int)FaultClass::LOGICAL_ERROR];
                uint64_t post = tally.counts[(int)FaultClass::POST_REJECTED];
                if (errors > 0 || (ver_order == 1 && post > 0)) {
                    failed = true;
                }
            }
            return failed ? EXIT_VERIFICATION_FAILED : EXIT_OK;
        }

        if (*exp) {
            PlanOptions po;
            po.rounds = exp_rounds;
            std::optional<Basis> b;
            auto settings = settings_for(exp_name, exp_basis);
            b = settings.front();
            ExperimentPlan plan = build_plan(exp_name, b, po);
            std::string text = plan.program.circuit.to_text();
            if (exp_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(exp_out);
                if (!(f << text)) {
                    throw std::runtime_error("cannot write '" + exp_out + "'");
                }
            }
            return EXIT_OK;
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BUDGET_EXCEEDED;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_OK;
}
