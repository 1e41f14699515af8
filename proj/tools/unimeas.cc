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

// Command-line front end: run, validate, or oracle-check a scenario file.
//
// Exit codes: 0 success, 1 scenario error (unreadable, malformed or invalid
// document, bad flags), 2 a step failed while running.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unimeas/runner.h"
#include "unimeas/scenario.h"

namespace {

constexpr int kExitScenarioError = 1;
constexpr int kExitStepError = 2;

struct Flags {
    std::string file;
    std::optional<double> tol;
    std::optional<std::string> relabel;
    std::optional<std::string> format;
    std::string out;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw unimeas::Error(unimeas::ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void add_run_flags(CLI::App *cmd, Flags &flags) {
    cmd->add_option("--tol", flags.tol, "Detection and readiness tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--relabel", flags.relabel, "Count anticorrelated clusters (default on)")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--format", flags.format, "Report format (default text)")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", flags.out, "Write the report here instead of stdout");
}

int emit(const std::string &text, const std::string &out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return kExitScenarioError;
    }
    file << text;
    return 0;
}

int run_command(const Flags &flags, unimeas::Engine engine) {
    unimeas::Scenario scenario;
    try {
        scenario = unimeas::parse_scenario(read_file(flags.file));
    } catch (const unimeas::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScenarioError;
    }
    unimeas::RunSettings settings = unimeas::settings_for(scenario);
    settings.engine = engine;
    if (flags.tol) {
        settings.tolerance = *flags.tol;
    }
    if (flags.relabel) {
        settings.relabel = *flags.relabel == "on";
    }
    unimeas::OutputFormat format = scenario.options.format;
    if (flags.format) {
        format = *flags.format == "json" ? unimeas::OutputFormat::kJson : unimeas::OutputFormat::kText;
    }

    unimeas::Report report;
    try {
        report = unimeas::execute(scenario, settings).report;
    } catch (const unimeas::StepError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStepError;
    } catch (const unimeas::Error &e) {
        // Setup failures (e.g. the oracle size cap) before any step ran.
        std::cerr << "error: " << e.what() << "\n";
        return kExitStepError;
    }
    return emit(format == unimeas::OutputFormat::kJson ? unimeas::render_json(report) : unimeas::render_text(report),
                flags.out);
}

int validate_command(const Flags &flags) {
    try {
        auto scenario = unimeas::parse_scenario(read_file(flags.file));
        std::cout << "ok: " << scenario.reg.size() << " qubits, " << scenario.script.size() << " steps\n";
        return 0;
    } catch (const unimeas::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScenarioError;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unitary measurement scenarios: gates, corrected measurement, correlation ledger"};
    app.require_subcommand(1);

    Flags flags;
    auto *run = app.add_subcommand("run", "Execute a scenario and print its report");
    run->add_option("file", flags.file, "Scenario JSON")->required();
    add_run_flags(run, flags);

    auto *validate = app.add_subcommand("validate", "Parse and validate a scenario without running it");
    validate->add_option("file", flags.file, "Scenario JSON")->required();

    auto *oracle = app.add_subcommand("oracle", "Run with dense reference matrices (at most 12 qubits)");
    oracle->add_option("file", flags.file, "Scenario JSON")->required();
    add_run_flags(oracle, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitScenarioError;
    }

    if (*run) {
        return run_command(flags, unimeas::Engine::kKernels);
    }
    if (*oracle) {
        return run_command(flags, unimeas::Engine::kOracle);
    }
    return validate_command(flags);
}
