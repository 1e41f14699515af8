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

#include <vector>

#include "unimeas/gates.h"
#include "unimeas/statevec.h"

namespace unimeas::oracle {

// Deliberately naive reference path: every gate becomes an explicit
// 2^n × 2^n matrix assembled from Kronecker products of 2×2 factors. Shares
// nothing with the amplitude kernels in gates.

inline constexpr size_t kMaxQubits = 12;

class DenseMatrix {
   public:
    explicit DenseMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
    }

    static DenseMatrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    Amplitude &operator()(size_t row, size_t col) {
        return data_[row * dim_ + col];
    }
    Amplitude operator()(size_t row, size_t col) const {
        return data_[row * dim_ + col];
    }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    std::vector<Amplitude> operator*(const std::vector<Amplitude> &v) const;
    DenseMatrix &operator+=(const DenseMatrix &rhs);
    DenseMatrix &operator*=(Amplitude scale);

   private:
    size_t dim_;
    std::vector<Amplitude> data_;
};

DenseMatrix from_matrix2(const Matrix2 &m);

/// A ⊗ B.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// factors[0] ⊗ factors[1] ⊗ … (position 0 is the most significant qubit).
DenseMatrix kron_chain(const std::vector<Matrix2> &factors);

/// Full-register matrix of `u` on `label`, identity elsewhere.
DenseMatrix single_qubit_operator(const Register &reg, std::string_view label, const Matrix2 &u);

/// Full-register matrix of one gate.
DenseMatrix gate_matrix(const Register &reg, const GateOp &op);

/// Product of the gate matrices, last gate leftmost.
DenseMatrix script_matrix(const Register &reg, const std::vector<GateOp> &script);

/// Applies the script one dense gate matrix at a time. Throws kSizeCap above
/// kMaxQubits.
PureState oracle_apply(const PureState &state, const std::vector<GateOp> &script);

}  // namespace unimeas::oracle
