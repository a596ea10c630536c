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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

using namespace tess;
using json = nlohmann::ordered_json;

ReportFormat tess::parse_report_format(const std::string &text) {
    if (text == "json") {
        return ReportFormat::JSON;
    }
    if (text == "csv") {
        return ReportFormat::CSV;
    }
    if (text == "table") {
        return ReportFormat::TABLE;
    }
    throw std::invalid_argument("unknown report format '" + text + "'");
}

const std::vector<std::string> &tess::report_columns() {
    static const std::vector<std::string> cols{
        "experiment", "basis", "trials", "prerejected", "postrejected", "acceptance_rate",
        "errors", "error_rate", "ci_low", "ci_high", "seed", "params_hash"};
    return cols;
}

static std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

static std::string fmt_percent(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*f%%", digits, 100 * v);
    return buf;
}

static std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

static json row_json(const TrialStats &t) {
    json j;
    j["experiment"] = t.experiment;
    j["basis"] = t.basis;
    j["trials"] = t.trials;
    j["prerejected"] = t.prerejected;
    j["postrejected"] = t.postrejected;
    j["acceptance_rate"] = t.acceptance_rate;
    j["errors"] = t.errors;
    j["error_rate"] = t.error_rate;
    j["ci_low"] = t.ci_low;
    j["ci_high"] = t.ci_high;
    j["seed"] = t.seed;
    j["params_hash"] = t.params_hash;
    j["accepted"] = t.accepted;
    j["confidence"] = t.confidence;
    return j;
}

std::string tess::emit_report(const std::vector<TrialStats> &rows, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::JSON: {
            json arr = json::array();
            for (const auto &t : rows) {
                arr.push_back(row_json(t));
            }
            out << arr.dump(2) << "\n";
            break;
        }
        case ReportFormat::CSV: {
            const auto &cols = report_columns();
            for (size_t k = 0; k < cols.size(); k++) {
                out << (k ? "," : "") << cols[k];
            }
            out << "\n";
            for (const auto &t : rows) {
                out << csv_field(t.experiment) << "," << csv_field(t.basis) << "," << t.trials << ","
                    << t.prerejected << "," << t.postrejected << "," << fmt_double(t.acceptance_rate) << ","
                    << t.errors << "," << fmt_double(t.error_rate) << "," << fmt_double(t.ci_low) << ","
                    << fmt_double(t.ci_high) << "," << t.seed << "," << csv_field(t.params_hash) << "\n";
            }
            break;
        }
        case ReportFormat::TABLE: {
            char line[256];
            std::snprintf(line, sizeof(line), "%-18s %-5s %9s %12s %13s %9s %8s %7s %-22s\n", "Experiment",
                          "Basis", "Trials", "Prerejected", "Postrejected", "Accepted", "Accept", "Errors",
                          "Error rate [ci]");
            out << line;
            for (const auto &t : rows) {
                std::string rate = fmt_percent(t.error_rate, 3) + " [" + fmt_percent(t.ci_low, 3) + ", " +
                                   fmt_percent(t.ci_high, 3) + "]";
                std::snprintf(line, sizeof(line), "%-18s %-5s %9llu %12llu %13llu %9llu %8s %7llu %-22s\n",
                              t.experiment.c_str(), t.basis.c_str(), (unsigned long long)t.trials,
                              (unsigned long long)t.prerejected, (unsigned long long)t.postrejected,
                              (unsigned long long)t.accepted, fmt_percent(t.acceptance_rate, 1).c_str(),
                              (unsigned long long)t.errors, rate.c_str());
                out << line;
            }
            break;
        }
    }
    return out.str();
}

std::vector<TrialStats> tess::parse_json_report(const std::string &text) {
    json arr = json::parse(text);
    if (!arr.is_array()) {
        throw std::invalid_argument("report must be a JSON array");
    }
    std::vector<TrialStats> rows;
    for (const auto &j : arr) {
        TrialStats t;
        t.experiment = j.at("experiment").get<std::string>();
        t.basis = j.at("basis").get<std::string>();
        t.trials = j.at("trials").get<uint64_t>();
        t.prerejected = j.at("prerejected").get<uint64_t>();
        t.postrejected = j.at("postrejected").get<uint64_t>();
        t.acceptance_rate = j.at("acceptance_rate").get<double>();
        t.errors = j.at("errors").get<uint64_t>();
        t.error_rate = j.at("error_rate").get<double>();
        t.ci_low = j.at("ci_low").get<double>();
        t.ci_high = j.at("ci_high").get<double>();
        t.seed = j.at("seed").get<uint64_t>();
        t.params_hash = j.at("params_hash").get<std::string>();
        t.accepted = j.value("accepted", t.trials - t.prerejected - t.postrejected);
        t.confidence = j.value("confidence", 0.683);
        rows.push_back(t);
    }
    return rows;
}

void tess::write_report(const std::vector<TrialStats> &rows, ReportFormat format, const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << emit_report(rows, format);
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}
