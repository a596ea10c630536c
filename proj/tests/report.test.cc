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

#include "tesseract/report.h"

#include <sstream>

#include <algorithm>

#include "gtest/gtest.h"

using namespace tess;

namespace {

std::vector<TrialStats> sample_rows() {
    TrialStats a;
    a.experiment = "path4-enc";
    a.basis = "X";
    a.trials = 6000;
    a.prerejected = 500;
    a.postrejected = 200;
    a.accepted = 5300;
    a.errors = 5;
    a.seed = 3;
    a.params_hash = "0123456789abcdef";
    a.finish();
    TrialStats b = a;
    b.experiment = "rep-ec-4";
    b.basis = "-";
    b.errors = 0;
    b.finish();
    return {a, b};
}

}  // namespace

TEST(report, columns) {
    EXPECT_EQ(report_columns(), (std::vector<std::string>{"experiment", "basis", "trials", "prerejected",
                                                          "postrejected", "acceptance_rate", "errors", "error_rate",
                                                          "ci_low", "ci_high", "seed", "params_hash"}));
}

TEST(report, csv) {
    std::string csv = emit_report(sample_rows(), ReportFormat::CSV);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    std::string want;
    for (const auto &c : report_columns()) {
        want += (want.empty() ? "" : ",") + c;
    }
    EXPECT_EQ(header, want);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        rows++;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), (long)report_columns().size() - 1);
    }
    EXPECT_EQ(rows, 2);
    EXPECT_NE(csv.find("path4-enc,X,6000,500,200,"), std::string::npos);
}

TEST(report, json_round_trip) {
    auto rows = sample_rows();
    auto back = parse_json_report(emit_report(rows, ReportFormat::JSON));
    ASSERT_EQ(back.size(), rows.size());
    for (size_t k = 0; k < rows.size(); k++) {
        EXPECT_EQ(back[k].experiment, rows[k].experiment);
        EXPECT_EQ(back[k].trials, rows[k].trials);
        EXPECT_EQ(back[k].accepted, rows[k].accepted);
        EXPECT_EQ(back[k].errors, rows[k].errors);
        EXPECT_NEAR(back[k].ci_high, rows[k].ci_high, 1e-12);
        EXPECT_EQ(back[k].params_hash, rows[k].params_hash);
    }
}

TEST(report, table_and_formats) {
    std::string table = emit_report(sample_rows(), ReportFormat::TABLE);
    EXPECT_NE(table.find("Experiment"), std::string::npos);
    EXPECT_NE(table.find("rep-ec-4"), std::string::npos);
    EXPECT_EQ(parse_report_format("csv"), ReportFormat::CSV);
    EXPECT_EQ(parse_report_format("json"), ReportFormat::JSON);
    EXPECT_EQ(parse_report_format("table"), ReportFormat::TABLE);
    EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
    EXPECT_THROW(write_report(sample_rows(), ReportFormat::CSV, "/nonexistent/dir/out.csv"), std::runtime_error);
}
