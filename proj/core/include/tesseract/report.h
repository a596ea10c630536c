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

#ifndef TESSERACT_REPORT_H
#define TESSERACT_REPORT_H

#include <ostream>
#include <string>
#include <vector>

#include "tesseract/stats.h"

namespace tess {

enum class ReportFormat { JSON, CSV, TABLE };

/// Parses "json", "csv" or "table". Throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string &text);

/// Column order shared by every format.
const std::vector<std::string> &report_columns();

std::string emit_report(const std::vector<TrialStats> &rows, ReportFormat format);
/// Inverse of the JSON format.
std::vector<TrialStats> parse_json_report(const std::string &text);
/// Writes the report to `path`. Throws std::runtime_error if the file cannot be written.
void write_report(const std::vector<TrialStats> &rows, ReportFormat format, const std::string &path);

}  // namespace tess

#endif
