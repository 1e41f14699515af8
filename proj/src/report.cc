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

#include "unimeas/report.h"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace unimeas {

namespace {

// Terminal columns taken by a UTF-8 string (one per code point).
size_t display_width(const std::string &s) {
    size_t width = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) {
            width++;
        }
    }
    return width;
}

void pad_to(std::string &out, const std::string &cell, size_t width) {
    out += cell;
    out.append(width - display_width(cell), ' ');
}

}  // namespace

std::string format_real(double value) {
    if (std::abs(value) <= kPruneThreshold) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::string text(buf);
    if (text == "-0") {
        return "0";
    }
    return text;
}

std::string format_complex(Amplitude value) {
    std::string re = format_real(value.real());
    std::string im = format_real(value.imag());
    if (im == "0") {
        return re;
    }
    if (re == "0") {
        return im + "i";
    }
    if (im.front() == '-') {
        return re + im + "i";
    }
    return re + "+" + im + "i";
}

std::string render_text(const Report &report) {
    std::string out;
    if (!report.name.empty()) {
        out += "# " + report.name + "\n\n";
    }
    for (size_t s = 0; s < report.sections.size(); s++) {
        const ReportSection &section = report.sections[s];
        if (s > 0) {
            out += "\n";
        }
        out += "== " + section.title + " ==\n";
        for (const auto &[key, value] : section.facts) {
            out += key + ": " + value + "\n";
        }
        if (section.columns.empty()) {
            continue;
        }
        std::vector<size_t> widths;
        for (const auto &c : section.columns) {
            widths.push_back(display_width(c));
        }
        for (const auto &row : section.rows) {
            for (size_t k = 0; k < row.size() && k < widths.size(); k++) {
                widths[k] = std::max(widths[k], display_width(row[k]));
            }
        }
        auto emit_row = [&](const std::vector<std::string> &cells) {
            std::string line;
            for (size_t k = 0; k < cells.size(); k++) {
                if (k + 1 == cells.size()) {
                    line += cells[k];
                } else {
                    pad_to(line, cells[k], widths[k]);
                    line += "  ";
                }
            }
            out += line + "\n";
        };
        emit_row(section.columns);
        for (const auto &row : section.rows) {
            emit_row(row);
        }
    }
    return out;
}

std::string render_json(const Report &report) {
    nlohmann::ordered_json doc;
    doc["name"] = report.name;
    doc["sections"] = nlohmann::ordered_json::array();
    for (const auto &section : report.sections) {
        nlohmann::ordered_json s;
        s["title"] = section.title;
        s["facts"] = nlohmann::ordered_json::object();
        for (const auto &[key, value] : section.facts) {
            s["facts"][key] = value;
        }
        s["columns"] = section.columns;
        s["rows"] = section.rows;
        doc["sections"].push_back(std::move(s));
    }
    return doc.dump(2) + "\n";
}

}  // namespace unimeas
