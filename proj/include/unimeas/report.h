// Copyright 2026 The unimeas Authors
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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unimeas/statevec.h"

namespace unimeas {

struct ReportSection {
    std::string title;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string name;
    std::vector<ReportSection> sections;
};

/// 12 significant digits. Magnitudes at or below kPruneThreshold print as "0",
/// and "-0" never appears.
std::string format_real(double value);
std::string format_complex(Amplitude value);

/// Section header line, "key: value" facts, aligned table, blank line between
/// sections.
std::string render_text(const Report &report);

/// Structured mirror of render_text.
std::string render_json(const Report &report);

}  // namespace unimeas
