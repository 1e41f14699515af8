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

#include "unimeas/statevec.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "kernels.h"
#include "unimeas/error.h"

namespace unimeas {

namespace {

constexpr size_t kMaxQubits = 30;

bool is_finite(Amplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

double squared_norm_of(std::span<const Amplitude> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

bool is_valid_label(std::string_view label) {
    if (label.empty()) {
        return false;
    }
    return std::none_of(label.begin(), label.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
    });
}

Register::Register(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxQubits) {
        throw Error(ErrorCode::kSizeCap, "register of " + std::to_string(labels_.size()) + " qubits exceeds the cap of " +
                                             std::to_string(kMaxQubits));
    }
    std::set<std::string_view> seen;
    for (const auto &label : labels_) {
        if (!is_valid_label(label)) {
            throw Error(ErrorCode::kInvalidArgument, "invalid subsystem label '" + label + "'");
        }
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::kDuplicateLabel, "duplicate subsystem label '" + label + "'");
        }
    }
}

std::optional<size_t> Register::find(std::string_view label) const {
    for (size_t k = 0; k < labels_.size(); k++) {
        if (labels_[k] == label) {
            return k;
        }
    }
    return std::nullopt;
}

size_t Register::position(std::string_view label) const {
    auto found = find(label);
    if (!found) {
        throw Error(ErrorCode::kUnknownLabel, "unknown subsystem label '" + std::string(label) + "'");
    }
    return *found;
}

PureState::PureState(Register reg, std::vector<Amplitude> amplitudes)
    : reg_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (uint64_t{1} << reg_.size())) {
        throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(uint64_t{1} << reg_.size()) +
                                                     " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), is_finite)) {
        throw Error(ErrorCode::kBadAmplitude, "non-finite amplitude");
    }
    double n2 = squared_norm_of(amplitudes_);
    if (std::abs(n2 - 1) > kNormTolerance) {
        throw Error(ErrorCode::kBadAmplitude, "state is not normalized (squared norm " + std::to_string(n2) + ")");
    }
}

PureState PureState::normalized(Register reg, std::vector<Amplitude> amplitudes) {
    if (!std::all_of(amplitudes.begin(), amplitudes.end(), is_finite)) {
        throw Error(ErrorCode::kBadAmplitude, "non-finite amplitude");
    }
    double n = std::sqrt(squared_norm_of(amplitudes));
    if (n == 0) {
        throw Error(ErrorCode::kBadAmplitude, "all amplitudes are zero");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return PureState(std::move(reg), std::move(amplitudes));
}

PureState PureState::basis_state(Register reg, uint64_t index) {
    std::vector<Amplitude> amps(uint64_t{1} << reg.size());
    if (index >= amps.size()) {
        throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
    amps[index] = 1;
    return PureState(std::move(reg), std::move(amps));
}

double PureState::squared_norm() const {
    return squared_norm_of(amplitudes_);
}

PureState product_state(const Register &reg, std::span<const QubitAmplitudes> per_qubit) {
    if (per_qubit.size() != reg.size()) {
        throw Error(ErrorCode::kInvalidArgument, "register has " + std::to_string(reg.size()) + " labels but " +
                                                     std::to_string(per_qubit.size()) + " amplitude pairs were given");
    }
    std::vector<Amplitude> amps{1.0};
    amps.reserve(uint64_t{1} << reg.size());
    for (size_t k = 0; k < reg.size(); k++) {
        auto [up, down] = per_qubit[k];
        if (!is_finite(up) || !is_finite(down)) {
            throw Error(ErrorCode::kBadAmplitude, "non-finite amplitude for '" + reg[k] + "'");
        }
        double n = std::sqrt(std::norm(up) + std::norm(down));
        if (n == 0) {
            throw Error(ErrorCode::kBadAmplitude, "zero amplitude pair for '" + reg[k] + "'");
        }
        up /= n;
        down /= n;
        std::vector<Amplitude> next(amps.size() * 2);
        for (size_t i = 0; i < amps.size(); i++) {
            next[2 * i] = amps[i] * up;
            next[2 * i + 1] = amps[i] * down;
        }
        amps = std::move(next);
    }
    return PureState(reg, std::move(amps));
}

PureState make_ghz(const std::vector<std::string> &labels, std::span<const Amplitude> coefficients) {
    if (labels.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "GHZ state needs at least one label");
    }
    if (coefficients.size() != 2) {
        throw Error(ErrorCode::kInvalidArgument, "GHZ state needs exactly two coefficients");
    }
    Register reg(labels);
    std::vector<Amplitude> amps(uint64_t{1} << reg.size());
    amps.front() = coefficients[0];
    amps.back() = coefficients[1];
    return PureState::normalized(std::move(reg), std::move(amps));
}

PureState tensor(const PureState &a, const PureState &b) {
    std::vector<std::string> labels = a.reg().labels();
    for (const auto &label : b.reg().labels()) {
        if (a.reg().contains(label)) {
            throw Error(ErrorCode::kDuplicateLabel, "label '" + label + "' appears in both operands");
        }
        labels.push_back(label);
    }
    Register reg(std::move(labels));
    auto lhs = a.amplitudes();
    auto rhs = b.amplitudes();
    std::vector<Amplitude> amps(lhs.size() * rhs.size());
    for (size_t i = 0; i < lhs.size(); i++) {
        for (size_t j = 0; j < rhs.size(); j++) {
            amps[i * rhs.size() + j] = lhs[i] * rhs[j];
        }
    }
    return PureState(std::move(reg), std::move(amps));
}

bool approx_eq(const PureState &a, const PureState &b, double tol, bool up_to_global_phase) {
    if (a.reg() != b.reg()) {
        throw Error(ErrorCode::kRegisterMismatch, "states are over different registers");
    }
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    Amplitude phase = 1;
    if (up_to_global_phase) {
        Amplitude overlap = 0;
        for (size_t i = 0; i < x.size(); i++) {
            overlap += std::conj(y[i]) * x[i];
        }
        if (std::abs(overlap) > 0) {
            phase = overlap / std::abs(overlap);
        }
    }
    for (size_t i = 0; i < x.size(); i++) {
        if (std::abs(x[i] - phase * y[i]) > tol) {
            return false;
        }
    }
    return true;
}

Matrix2 reduced_density(const PureState &state, std::string_view label) {
    const uint64_t mask = uint64_t{1} << state.reg().bit(label);
    Matrix2 rho{};
    auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (i & mask) {
            continue;
        }
        Amplitude a0 = amps[i];
        Amplitude a1 = amps[i | mask];
        rho[0][0] += a0 * std::conj(a0);
        rho[0][1] += a0 * std::conj(a1);
        rho[1][0] += a1 * std::conj(a0);
        rho[1][1] += a1 * std::conj(a1);
    }
    return rho;
}

Symbol symbol_for(Basis basis, int bit) {
    if (basis == Basis::kZ) {
        return bit ? Symbol::kDown : Symbol::kUp;
    }
    return bit ? Symbol::kLeft : Symbol::kRight;
}

std::string_view symbol_text(Symbol symbol) {
    switch (symbol) {
        case Symbol::kUp:
            return "↑";
        case Symbol::kDown:
            return "↓";
        case Symbol::kRight:
            return "→";
        case Symbol::kLeft:
            return "←";
    }
    return "?";
}

char basis_name(Basis basis) {
    return basis == Basis::kZ ? 'Z' : 'X';
}

BasisChoice uniform_basis(const Register &reg, Basis basis) {
    BasisChoice choice;
    for (const auto &label : reg.labels()) {
        choice.emplace(label, basis);
    }
    return choice;
}

Symbol BranchSet::symbol(const Branch &branch, std::string_view label) const {
    return branch.outcome[reg.position(label)];
}

std::string BranchSet::outcome_text(const Branch &branch) const {
    std::string text;
    for (Symbol s : branch.outcome) {
        text += symbol_text(s);
    }
    return text;
}

double BranchSet::total_probability() const {
    double total = 0;
    for (const auto &b : branches) {
        total += b.probability();
    }
    return total;
}

BranchSet branch_decompose(const PureState &state, const BasisChoice &basis) {
    const Register &reg = state.reg();
    if (basis.size() != reg.size()) {
        throw Error(ErrorCode::kRegisterMismatch, "basis choice has " + std::to_string(basis.size()) +
                                                      " entries for a register of " + std::to_string(reg.size()));
    }
    BranchSet result{reg, {}, {}};
    result.basis.reserve(reg.size());
    for (const auto &label : reg.labels()) {
        auto it = basis.find(label);
        if (it == basis.end()) {
            throw Error(ErrorCode::kRegisterMismatch, "basis choice does not cover '" + label + "'");
        }
        result.basis.push_back(it->second);
    }

    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (size_t p = 0; p < reg.size(); p++) {
        if (result.basis[p] == Basis::kX) {
            detail::apply_hadamard(amps, reg.bit_of_position(p));
        }
    }
    const size_t n = reg.size();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (std::abs(amps[i]) <= kPruneThreshold) {
            continue;
        }
        Branch branch{std::vector<Symbol>(n), amps[i]};
        for (size_t p = 0; p < n; p++) {
            branch.outcome[p] = symbol_for(result.basis[p], static_cast<int>((i >> (n - 1 - p)) & 1));
        }
        result.branches.push_back(std::move(branch));
    }
    return result;
}

PureState reconstruct(const BranchSet &branches) {
    const Register &reg = branches.reg;
    const size_t n = reg.size();
    std::vector<Amplitude> amps(uint64_t{1} << n);
    for (const auto &branch : branches.branches) {
        uint64_t index = 0;
        for (size_t p = 0; p < n; p++) {
            Symbol s = branch.outcome[p];
            bool one = s == Symbol::kDown || s == Symbol::kLeft;
            index = (index << 1) | (one ? 1 : 0);
        }
        amps[index] = branch.amplitude;
    }
    for (size_t p = 0; p < n; p++) {
        if (branches.basis[p] == Basis::kX) {
            detail::apply_hadamard(amps, reg.bit_of_position(p));
        }
    }
    return PureState::normalized(reg, std::move(amps));
}

}  // namespace unimeas
