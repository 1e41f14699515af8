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
#include <vector>

#include "unimeas/statevec.h"

namespace unimeas {

enum class GateKind : uint8_t { kImprint, kInverseImprint, kSwap, kRotateBasis };

std::string_view gate_kind_name(GateKind kind);

/// A named local unitary bound to subsystem labels. For imprints `first` is the
/// source and `second` the target; RotateBasis uses only `first`.
struct GateOp {
    GateKind kind;
    std::string first;
    std::string second;

    static GateOp imprint(std::string source, std::string target) {
        return {GateKind::kImprint, std::move(source), std::move(target)};
    }
    static GateOp inverse_imprint(std::string source, std::string target) {
        return {GateKind::kInverseImprint, std::move(source), std::move(target)};
    }
    static GateOp swap(std::string a, std::string b) {
        return {GateKind::kSwap, std::move(a), std::move(b)};
    }
    static GateOp rotate_basis(std::string target) {
        return {GateKind::kRotateBasis, std::move(target), {}};
    }

    bool is_two_qubit() const {
        return kind != GateKind::kRotateBasis;
    }
    std::string to_string() const;

    bool operator==(const GateOp &other) const = default;
};

/// The gate that undoes `op`.
GateOp inverse(const GateOp &op);

/// Reversed list of inverted gates; apply_script(apply_script(x, s), inverse_script(s)) == x.
std::vector<GateOp> inverse_script(const std::vector<GateOp> &script);

/// Throws if an operand is missing from `reg` or the operands coincide.
void validate_gate(const GateOp &op, const Register &reg);

// Imprint a→b: |↑x⟩ → |↑x⟩, |↓↑⟩ → |↓↓⟩, |↓↓⟩ → |↓↑⟩. A CNOT that fires on ↓.
PureState imprint(const PureState &state, std::string_view source, std::string_view target);

// For qubits the inverse imprint coincides with the imprint.
PureState inverse_imprint(const PureState &state, std::string_view source, std::string_view target);

PureState swap(const PureState &state, std::string_view a, std::string_view b);

/// Self-inverse change of basis |↑⟩ → |→⟩, |↓⟩ → |←⟩, so measuring Z after the
/// rotation equals measuring X before it.
PureState rotate_basis(const PureState &state, std::string_view target);

/// Applies `u` to `target`. Throws kNotUnitary unless ‖u†u − I‖_max ≤ 1e-9.
PureState apply_single(const PureState &state, std::string_view target, const Matrix2 &u);

/// Applies the gates in list order. The whole script is validated first, so an
/// invalid gate leaves no partial result.
PureState apply_script(PureState state, const std::vector<GateOp> &script);

}  // namespace unimeas
