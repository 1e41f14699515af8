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

// Amplitude-array kernels shared by statevec and gates. Bits are index bits
// (0 = least significant), not register positions.

#include <cstdint>
#include <span>
#include <utility>

#include "unimeas/statevec.h"

namespace unimeas::detail {

/// Inserts a zero at bit `b` of `i`, shifting the higher bits up.
inline uint64_t insert_zero_bit(uint64_t i, unsigned b) {
    uint64_t low = i & ((uint64_t{1} << b) - 1);
    return ((i >> b) << (b + 1)) | low;
}

inline uint64_t insert_two_zero_bits(uint64_t i, unsigned b1, unsigned b2) {
    if (b1 > b2) {
        std::swap(b1, b2);
    }
    return insert_zero_bit(insert_zero_bit(i, b1), b2);
}

/// |c t⟩ → |c, t ⊕ c⟩.
inline void controlled_flip(std::span<Amplitude> amps, unsigned control_bit, unsigned target_bit) {
    const uint64_t cmask = uint64_t{1} << control_bit;
    const uint64_t tmask = uint64_t{1} << target_bit;
    const uint64_t quarter = amps.size() >> 2;
    for (uint64_t i = 0; i < quarter; i++) {
        uint64_t base = insert_two_zero_bits(i, control_bit, target_bit) | cmask;
        std::swap(amps[base], amps[base | tmask]);
    }
}

/// |x y⟩ → |y x⟩.
inline void swap_bits(std::span<Amplitude> amps, unsigned a_bit, unsigned b_bit) {
    const uint64_t amask = uint64_t{1} << a_bit;
    const uint64_t bmask = uint64_t{1} << b_bit;
    const uint64_t quarter = amps.size() >> 2;
    for (uint64_t i = 0; i < quarter; i++) {
        uint64_t base = insert_two_zero_bits(i, a_bit, b_bit);
        std::swap(amps[base | amask], amps[base | bmask]);
    }
}

inline void apply_matrix(std::span<Amplitude> amps, unsigned bit, const Matrix2 &u) {
    const uint64_t mask = uint64_t{1} << bit;
    const uint64_t half = amps.size() >> 1;
    for (uint64_t i = 0; i < half; i++) {
        uint64_t i0 = insert_zero_bit(i, bit);
        uint64_t i1 = i0 | mask;
        Amplitude a0 = amps[i0];
        Amplitude a1 = amps[i1];
        amps[i0] = u[0][0] * a0 + u[0][1] * a1;
        amps[i1] = u[1][0] * a0 + u[1][1] * a1;
    }
}

/// |↑⟩ → (|↑⟩+|↓⟩)/√2, |↓⟩ → (|↑⟩−|↓⟩)/√2. Real arithmetic only.
inline void apply_hadamard(std::span<Amplitude> amps, unsigned bit) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    const uint64_t mask = uint64_t{1} << bit;
    const uint64_t half = amps.size() >> 1;
    for (uint64_t i = 0; i < half; i++) {
        uint64_t i0 = insert_zero_bit(i, bit);
        uint64_t i1 = i0 | mask;
        Amplitude a0 = amps[i0];
        Amplitude a1 = amps[i1];
        amps[i0] = (a0 + a1) * kInvSqrt2;
        amps[i1] = (a0 - a1) * kInvSqrt2;
    }
}

}  // namespace unimeas::detail
