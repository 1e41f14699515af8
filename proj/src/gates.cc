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

#include "unimeas/gates.h"

#include <algorithm>
#include <cmath>

#include "kernels.h"
#include "unimeas/error.h"

namespace unimeas {

namespace {

constexpr double kUnitaryTolerance = 1e-9;

void check_pair(const Register &reg, std::string_view a, std::string_view b) {
    reg.position(a);
    reg.position(b);
    if (a == b) {
        throw Error(ErrorCode::kInvalidArgument, "gate operands must be distinct, got '" + std::string(a) + "' twice");
    }
}

void apply_in_place(std::span<Amplitude> amps, const Register &reg, const GateOp &op) {
    switch (op.kind) {
        case GateKind::kImprint:
        case GateKind::kInverseImprint:
            detail::controlled_flip(amps, reg.bit(op.first), reg.bit(op.second));
            break;
        case GateKind::kSwap:
            detail::swap_bits(amps, reg.bit(op.first), reg.bit(op.second));
            break;
        case GateKind::kRotateBasis:
            detail::apply_hadamard(amps, reg.bit(op.first));
            break;
    }
}

PureState apply_one(const PureState &state, const GateOp &op) {
    validate_gate(op, state.reg());
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_in_place(amps, state.reg(), op);
    return PureState(state.reg(), std::move(amps));
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kImprint:
            return "imprint";
        case GateKind::kInverseImprint:
            return "inverse_imprint";
        case GateKind::kSwap:
            return "swap";
        case GateKind::kRotateBasis:
            return "rotate_basis";
    }
    return "?";
}

std::string GateOp::to_string() const {
    std::string text(gate_kind_name(kind));
    text += "(" + first;
    if (is_two_qubit()) {
        text += "," + second;
    }
    return text + ")";
}

GateOp inverse(const GateOp &op) {
    switch (op.kind) {
        case GateKind::kImprint:
            return GateOp::inverse_imprint(op.first, op.second);
        case GateKind::kInverseImprint:
            return GateOp::imprint(op.first, op.second);
        case GateKind::kSwap:
        case GateKind::kRotateBasis:
            return op;
    }
    return op;
}

std::vector<GateOp> inverse_script(const std::vector<GateOp> &script) {
    std::vector<GateOp> result;
    result.reserve(script.size());
    for (auto it = script.rbegin(); it != script.rend(); ++it) {
        result.push_back(inverse(*it));
    }
    return result;
}

void validate_gate(const GateOp &op, const Register &reg) {
    if (op.is_two_qubit()) {
        check_pair(reg, op.first, op.second);
    } else {
        reg.position(op.first);
    }
}

PureState imprint(const PureState &state, std::string_view source, std::string_view target) {
    return apply_one(state, GateOp::imprint(std::string(source), std::string(target)));
}

PureState inverse_imprint(const PureState &state, std::string_view source, std::string_view target) {
    return apply_one(state, GateOp::inverse_imprint(std::string(source), std::string(target)));
}

PureState swap(const PureState &state, std::string_view a, std::string_view b) {
    return apply_one(state, GateOp::swap(std::string(a), std::string(b)));
}

PureState rotate_basis(const PureState &state, std::string_view target) {
    return apply_one(state, GateOp::rotate_basis(std::string(target)));
}

PureState apply_single(const PureState &state, std::string_view target, const Matrix2 &u) {
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            if (!std::isfinite(u[r][c].real()) || !std::isfinite(u[r][c].imag())) {
                throw Error(ErrorCode::kNotUnitary, "matrix has a non-finite entry");
            }
            Amplitude dot = std::conj(u[0][r]) * u[0][c] + std::conj(u[1][r]) * u[1][c];
            if (std::abs(dot - Amplitude(r == c ? 1.0 : 0.0)) > kUnitaryTolerance) {
                throw Error(ErrorCode::kNotUnitary, "matrix is not unitary");
            }
        }
    }
    unsigned bit = state.reg().bit(target);
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    detail::apply_matrix(amps, bit, u);
    return PureState(state.reg(), std::move(amps));
}

PureState apply_script(PureState state, const std::vector<GateOp> &script) {
    for (const auto &op : script) {
        validate_gate(op, state.reg());
    }
    if (script.empty()) {
        return state;
    }
    Register reg = state.reg();
    std::vector<Amplitude> amps = std::move(state).release();
    for (const auto &op : script) {
        apply_in_place(amps, reg, op);
    }
    return PureState(std::move(reg), std::move(amps));
}

}  // namespace unimeas
