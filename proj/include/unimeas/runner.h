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

#include <cstddef>
#include <string>

#include "unimeas/error.h"
#include "unimeas/report.h"
#include "unimeas/scenario.h"

namespace unimeas {

enum class Engine {
    kKernels,  // amplitude kernels from gates
    kOracle,   // dense Kronecker-product matrices, cross-checked against the kernels
};

struct RunSettings {
    double tolerance = kDefaultClusterTolerance;
    bool relabel = true;
    Engine engine = Engine::kKernels;
};

/// Settings taken from the scenario's options block.
RunSettings settings_for(const Scenario &scenario);

/// A step failed while running. Carries the failing step's 1-based index.
class StepError : public Error {
   public:
    StepError(size_t step, const std::string &op, const Error &cause);

    size_t step() const noexcept {
        return step_;
    }

   private:
    size_t step_;
};

struct RunResult {
    Report report;
    PureState final_state;
};

/// Executes the script in order. Analysis steps append report sections; the
/// report opens with the initial state and, if the script is nonempty, closes
/// with the final state.
RunResult execute(const Scenario &scenario, const RunSettings &settings);

inline Report run(const Scenario &scenario) {
    return execute(scenario, settings_for(scenario)).report;
}

}  // namespace unimeas
