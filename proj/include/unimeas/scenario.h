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
#include <string_view>
#include <variant>
#include <vector>

#include "unimeas/analysis.h"
#include "unimeas/gates.h"
#include "unimeas/protocol.h"
#include "unimeas/statevec.h"

namespace unimeas {

struct SingleQubitDecl {
    std::string label;
    QubitAmplitudes amplitudes;
};

struct GhzDecl {
    std::vector<std::string> labels;
    QubitAmplitudes coefficients;
};

using SubsystemDecl = std::variant<SingleQubitDecl, GhzDecl>;

struct GateStep {
    GateOp op;
};
struct UncorrectedMeasureStep {
    std::string signal;
    std::string observer;
    std::string environment;
};
struct CorrectedMeasureStep {
    MeasurementSpec spec;
};
struct IdealMeasureStep {
    std::string signal;
    std::string observer;
    Basis basis;
};
struct BranchesStep {
    BasisChoice basis;
};
struct LedgerStep {
    std::string tag;
};
struct AgreementStep {
    BasisChoice basis;
    std::vector<LabelPair> pairs;
};
struct RecoverRecordStep {
    BasisChoice basis;
    std::vector<std::string> records;
};

using Step = std::variant<GateStep, UncorrectedMeasureStep, CorrectedMeasureStep, IdealMeasureStep, BranchesStep,
                          LedgerStep, AgreementStep, RecoverRecordStep>;

/// Value of the step's "op" key.
std::string step_name(const Step &step);

enum class OutputFormat { kText, kJson };

struct ScenarioOptions {
    double tolerance = kDefaultClusterTolerance;
    bool relabel = true;
    OutputFormat format = OutputFormat::kText;
};

struct Scenario {
    std::string name;
    std::vector<SubsystemDecl> subsystems;
    Register reg;  // declaration order
    std::vector<Step> script;
    ScenarioOptions options;
};

/// Parses and fully validates a scenario document (JSON). Failures throw Error
/// with kSyntax (with line and column), kSchema, kUnknownLabel,
/// kDuplicateLabel or kBadAmplitude.
Scenario parse_scenario(std::string_view text);

/// Tensor product of the declarations, in declaration order.
PureState initial_state(const Scenario &scenario);

}  // namespace unimeas
