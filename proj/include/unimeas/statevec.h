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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unimeas {

using Amplitude = std::complex<double>;

/// (amplitude of |↑⟩, amplitude of |↓⟩) for one qubit.
using QubitAmplitudes = std::array<Amplitude, 2>;

/// Row-major 2×2 complex matrix; row/column 0 is |↑⟩.
using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

/// Accepted deviation of the squared norm from 1 for any constructed state.
inline constexpr double kNormTolerance = 1e-9;

/// Branches with |amplitude| at or below this are treated as absent.
inline constexpr double kPruneThreshold = 1e-12;

/// Labels are nonempty and contain no whitespace.
bool is_valid_label(std::string_view label);

/// Ordered list of subsystem labels. Position 0 is the most significant bit of
/// the amplitude index, so |s o e⟩ reads left to right like a ket.
class Register {
   public:
    Register() = default;
    explicit Register(std::vector<std::string> labels);

    size_t size() const noexcept {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    const std::string &operator[](size_t position) const {
        return labels_[position];
    }

    std::optional<size_t> find(std::string_view label) const;
    bool contains(std::string_view label) const {
        return find(label).has_value();
    }
    /// Throws kUnknownLabel.
    size_t position(std::string_view label) const;

    /// Bit of the amplitude index (0 = least significant) that holds `label`.
    unsigned bit(std::string_view label) const {
        return bit_of_position(position(label));
    }
    unsigned bit_of_position(size_t position) const noexcept {
        return static_cast<unsigned>(labels_.size() - 1 - position);
    }

    bool operator==(const Register &other) const = default;

   private:
    std::vector<std::string> labels_;
};

/// Normalized pure state over a labeled qubit register.
///
/// Instances are immutable values. Every constructor checks that the
/// amplitude count is 2^n, that all amplitudes are finite, and that the squared
/// norm is within kNormTolerance of 1.
class PureState {
   public:
    PureState(Register reg, std::vector<Amplitude> amplitudes);

    /// Rescales `amplitudes` to unit norm before validation.
    static PureState normalized(Register reg, std::vector<Amplitude> amplitudes);
    static PureState basis_state(Register reg, uint64_t index);

    const Register &reg() const noexcept {
        return reg_;
    }
    size_t num_qubits() const noexcept {
        return reg_.size();
    }
    uint64_t dimension() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    Amplitude operator[](uint64_t index) const {
        return amplitudes_[index];
    }

    /// Moves the amplitude buffer out so that callers can evolve a private copy.
    std::vector<Amplitude> release() && {
        return std::move(amplitudes_);
    }

    double squared_norm() const;

   private:
    Register reg_;
    std::vector<Amplitude> amplitudes_;
};

PureState product_state(const Register &reg, std::span<const QubitAmplitudes> per_qubit);

/// Σ_k χ_k |k⟩^⊗N over `labels`, normalized. Exactly two coefficients (k ∈ {↑,↓}).
PureState make_ghz(const std::vector<std::string> &labels, std::span<const Amplitude> coefficients);

/// a's labels followed by b's; amplitudes are the outer product.
PureState tensor(const PureState &a, const PureState &b);

/// True iff max_i |a_i − e^{iθ} b_i| ≤ tol, where θ = 0 unless
/// `up_to_global_phase` is set, in which case θ is the phase of ⟨b|a⟩.
bool approx_eq(const PureState &a, const PureState &b, double tol, bool up_to_global_phase = false);

/// Reduced density matrix of one qubit.
Matrix2 reduced_density(const PureState &state, std::string_view label);

enum class Basis : uint8_t { kZ, kX };

/// Z basis: ↑ (0) and ↓ (1). X basis: → (0) and ← (1).
enum class Symbol : uint8_t { kUp, kDown, kRight, kLeft };

Symbol symbol_for(Basis basis, int bit);
/// UTF-8 arrow for the symbol.
std::string_view symbol_text(Symbol symbol);
char basis_name(Basis basis);

/// One selector per register label.
using BasisChoice = std::map<std::string, Basis, std::less<>>;

BasisChoice uniform_basis(const Register &reg, Basis basis);

struct Branch {
    std::vector<Symbol> outcome;  // in register order
    Amplitude amplitude;

    double probability() const {
        return std::norm(amplitude);
    }
};

struct BranchSet {
    Register reg;
    std::vector<Basis> basis;  // in register order
    std::vector<Branch> branches;

    /// Symbol of `label` in `branch`. Throws kUnknownLabel.
    Symbol symbol(const Branch &branch, std::string_view label) const;
    std::string outcome_text(const Branch &branch) const;
    double total_probability() const;
};

/// Expands `state` over the product basis selected per qubit. Branches are
/// listed in lexicographic outcome order (↑ < ↓, → < ←), pruned at
/// kPruneThreshold.
BranchSet branch_decompose(const PureState &state, const BasisChoice &basis);

/// Inverse of branch_decompose: Σ amplitude·|outcome⟩ mapped back to the
/// computational basis. Pruned weight is lost.
PureState reconstruct(const BranchSet &branches);

}  // namespace unimeas
