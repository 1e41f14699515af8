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

#include "unimeas/runner.h"

#include <cmath>
#include <optional>

#include "unimeas/oracle.h"

namespace unimeas {

namespace {

constexpr double kCrossCheckTolerance = 1e-10;

std::string join(const std::vector<std::string> &items, const char *sep = ",") {
    std::string out;
    for (const auto &item : items) {
        out += (out.empty() ? "" : sep) + item;
    }
    return out;
}

std::string basis_text(const BranchSet &branches) {
    std::string text;
    for (size_t p = 0; p < branches.reg.size(); p++) {
        text += (p ? " " : "") + branches.reg[p] + ":" + basis_name(branches.basis[p]);
    }
    return text;
}

std::vector<std::string> outcome_cells(const std::vector<Symbol> &outcome) {
    std::vector<std::string> cells;
    for (Symbol s : outcome) {
        cells.emplace_back(symbol_text(s));
    }
    return cells;
}

ReportSection branch_section(std::string title, const BranchSet &branches) {
    ReportSection section{std::move(title), {}, branches.reg.labels(), {}};
    section.facts.emplace_back("basis", basis_text(branches));
    section.facts.emplace_back("branches", std::to_string(branches.branches.size()));
    section.facts.emplace_back("total probability", format_real(branches.total_probability()));
    section.columns.insert(section.columns.end(), {"re", "im", "probability"});
    for (const auto &branch : branches.branches) {
        auto row = outcome_cells(branch.outcome);
        row.push_back(format_real(branch.amplitude.real()));
        row.push_back(format_real(branch.amplitude.imag()));
        row.push_back(format_real(branch.probability()));
        section.rows.push_back(std::move(row));
    }
    return section;
}

ReportSection state_section(std::string title, const PureState &state) {
    ReportSection section = branch_section(std::move(title), branch_decompose(state, uniform_basis(state.reg(), Basis::kZ)));
    section.facts.insert(section.facts.begin(), {"norm", format_real(std::sqrt(state.squared_norm()))});
    section.facts.insert(section.facts.begin(), {"register", join(state.reg().labels(), " ")});
    return section;
}

ReportSection ledger_section(std::string title, const CorrelationLedger &ledger, double tol) {
    const LedgerEntry &entry = ledger.entries.back();
    ReportSection section{std::move(title), {}, {"cluster", "c↑", "c↓", "flipped", "measure"}, {}};
    section.facts.emplace_back("tag", entry.tag);
    section.facts.emplace_back("total measure", std::to_string(entry.total));
    std::string history;
    for (const auto &e : ledger.entries) {
        history += (history.empty() ? "" : ", ") + e.tag + "=" + std::to_string(e.total);
    }
    section.facts.emplace_back("history", history);
    for (const auto &cluster : entry.snapshot.clusters) {
        std::vector<std::string> flipped;
        for (size_t k = 0; k < cluster.size(); k++) {
            if (cluster.flipped[k]) {
                flipped.push_back(cluster.members[k]);
            }
        }
        section.rows.push_back({"{" + join(cluster.members) + "}", format_complex(cluster.coefficients[0]),
                                format_complex(cluster.coefficients[1]), flipped.empty() ? "-" : join(flipped),
                                std::to_string(cluster_measure(cluster, tol))});
    }
    return section;
}

ReportSection agreement_section(std::string title, const BranchSet &branches, const AgreementReport &report) {
    ReportSection section{std::move(title), {}, branches.reg.labels(), {}};
    section.facts.emplace_back("basis", basis_text(branches));
    section.columns.push_back("probability");
    for (size_t k = 0; k < report.pairs.size(); k++) {
        const std::string name = report.pairs[k].first + "," + report.pairs[k].second;
        section.columns.push_back("agree(" + name + ")");
        section.facts.emplace_back("agreement(" + name + ")", format_real(report.aggregate[k]));
        section.facts.emplace_back("disagreement(" + name + ")", format_real(report.disagreement(k)));
    }
    for (const auto &row : report.rows) {
        auto cells = outcome_cells(row.outcome);
        cells.push_back(format_real(row.probability));
        for (bool a : row.agree) {
            cells.push_back(a ? "yes" : "no");
        }
        section.rows.push_back(std::move(cells));
    }
    return section;
}

ReportSection recover_section(std::string title, const BranchSet &branches,
                              const std::vector<std::string> &records,
                              const std::vector<std::optional<Symbol>> &recovered) {
    ReportSection section{std::move(title), {}, branches.reg.labels(), {}};
    section.facts.emplace_back("basis", basis_text(branches));
    section.facts.emplace_back("records", join(records));
    section.columns.insert(section.columns.end(), {"probability", "record"});
    double consistent = 0;
    for (size_t k = 0; k < branches.branches.size(); k++) {
        const Branch &branch = branches.branches[k];
        auto cells = outcome_cells(branch.outcome);
        cells.push_back(format_real(branch.probability()));
        if (recovered[k]) {
            cells.emplace_back(symbol_text(*recovered[k]));
            consistent += branch.probability();
        } else {
            cells.emplace_back("inconsistent");
        }
        section.rows.push_back(std::move(cells));
    }
    section.facts.emplace_back("consistent weight", format_real(consistent));
    return section;
}

class Executor {
   public:
    Executor(const Scenario &scenario, const RunSettings &settings)
        : scenario_(scenario), settings_(settings), state_(initial_state(scenario)) {
        if (settings_.engine == Engine::kOracle) {
            shadow_ = state_;
            if (state_.num_qubits() > oracle::kMaxQubits) {
                throw Error(ErrorCode::kSizeCap, "oracle runs are capped at " + std::to_string(oracle::kMaxQubits) +
                                                     " qubits");
            }
        }
    }

    RunResult run() {
        report_.name = scenario_.name;
        report_.sections.push_back(state_section("initial state", state_));
        for (size_t k = 0; k < scenario_.script.size(); k++) {
            const Step &step = scenario_.script[k];
            try {
                std::visit([&](const auto &s) { apply(s, k + 1); }, step);
            } catch (const Error &e) {
                throw StepError(k + 1, step_name(step), e);
            }
        }
        if (!scenario_.script.empty()) {
            report_.sections.push_back(state_section("final state", state_));
        }
        if (shadow_) {
            report_.sections.push_back(cross_check_section());
        }
        return {std::move(report_), std::move(state_)};
    }

   private:
    void evolve(const std::vector<GateOp> &script) {
        if (shadow_) {
            shadow_ = apply_script(std::move(*shadow_), script);
            state_ = oracle::oracle_apply(state_, script);
        } else {
            state_ = apply_script(std::move(state_), script);
        }
    }

    std::string title(size_t index, const std::string &what) const {
        return "step " + std::to_string(index) + ": " + what;
    }

    void apply(const GateStep &s, size_t) {
        evolve({s.op});
    }

    void apply(const UncorrectedMeasureStep &s, size_t) {
        evolve(uncorrected_script(s.signal, s.observer, s.environment));
    }

    void apply(const CorrectedMeasureStep &s, size_t) {
        auto script = corrected_script(s.spec);
        check_ghz_environment(state_, s.spec, settings_.tolerance);
        evolve(script);
    }

    void apply(const IdealMeasureStep &s, size_t) {
        check_observer_ready(state_, s.observer, s.basis, settings_.tolerance);
        evolve(ideal_script(s.signal, s.observer, s.basis));
    }

    void apply(const BranchesStep &s, size_t index) {
        report_.sections.push_back(branch_section(title(index, "branches"), branch_decompose(state_, s.basis)));
    }

    void apply(const LedgerStep &s, size_t index) {
        std::string tag = s.tag.empty() ? "step " + std::to_string(index) : s.tag;
        ledger_ = ledger_record(std::move(ledger_), state_, tag, {settings_.tolerance, settings_.relabel});
        report_.sections.push_back(ledger_section(title(index, "ledger " + tag), ledger_, settings_.tolerance));
    }

    void apply(const AgreementStep &s, size_t index) {
        BranchSet branches = branch_decompose(state_, s.basis);
        report_.sections.push_back(agreement_section(title(index, "agreement"), branches, agreement(branches, s.pairs)));
    }

    void apply(const RecoverRecordStep &s, size_t index) {
        BranchSet branches = branch_decompose(state_, s.basis);
        report_.sections.push_back(
            recover_section(title(index, "recover_record"), branches, s.records, recover_record(branches, s.records)));
    }

    ReportSection cross_check_section() const {
        double worst = 0;
        for (uint64_t i = 0; i < state_.dimension(); i++) {
            worst = std::max(worst, std::abs(state_[i] - (*shadow_)[i]));
        }
        ReportSection section{"oracle cross-check", {}, {}, {}};
        section.facts.emplace_back("max amplitude deviation", format_real(worst));
        section.facts.emplace_back("tolerance", format_real(kCrossCheckTolerance));
        section.facts.emplace_back("agree", worst <= kCrossCheckTolerance ? "yes" : "no");
        return section;
    }

    const Scenario &scenario_;
    RunSettings settings_;
    PureState state_;
    std::optional<PureState> shadow_;
    CorrelationLedger ledger_;
    Report report_;
};

}  // namespace

RunSettings settings_for(const Scenario &scenario) {
    return {scenario.options.tolerance, scenario.options.relabel, Engine::kKernels};
}

StepError::StepError(size_t step, const std::string &op, const Error &cause)
    : Error(cause.code(), "step " + std::to_string(step) + " (" + op + "): " + cause.message()), step_(step) {
}

RunResult execute(const Scenario &scenario, const RunSettings &settings) {
    return Executor(scenario, settings).run();
}

}  // namespace unimeas
