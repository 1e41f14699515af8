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

#include "unimeas/oracle.h"

#include <cmath>

#include "unimeas/error.h"

namespace unimeas::oracle {

namespace {

const Matrix2 kIdentity{{{1, 0}, {0, 1}}};
const Matrix2 kProjectUp{{{1, 0}, {0, 0}}};
const Matrix2 kProjectDown{{{0, 0}, {0, 1}}};
const Matrix2 kPauliX{{{0, 1}, {1, 0}}};
const Matrix2 kPauliY{{{0, Amplitude(0, -1)}, {Amplitude(0, 1), 0}}};
const Matrix2 kPauliZ{{{1, 0}, {0, -1}}};
const Matrix2 kHadamard{{{M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, -M_SQRT1_2}}};

void check_size(const Register &reg) {
    if (reg.size() > kMaxQubits) {
        throw Error(ErrorCode::kSizeCap, "oracle is capped at " + std::to_string(kMaxQubits) + " qubits, register has " +
                                             std::to_string(reg.size()));
    }
}

// Identity everywhere except the given factors.
DenseMatrix local_product(const Register &reg, const std::vector<std::pair<std::string, Matrix2>> &placed) {
    std::vector<Matrix2> factors(reg.size(), kIdentity);
    for (const auto &[label, m] : placed) {
        factors[reg.position(label)] = m;
    }
    return kron_chain(factors);
}

}  // namespace

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    DenseMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            Amplitude a = (*this)(r, k);
            if (a == Amplitude(0)) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

std::vector<Amplitude> DenseMatrix::operator*(const std::vector<Amplitude> &v) const {
    std::vector<Amplitude> out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        Amplitude acc = 0;
        for (size_t c = 0; c < dim_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &rhs) {
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(Amplitude scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

DenseMatrix from_matrix2(const Matrix2 &m) {
    DenseMatrix out(2);
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            out(r, c) = m[r][c];
        }
    }
    return out;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    const size_t db = b.dim();
    DenseMatrix out(a.dim() * db);
    for (size_t ar = 0; ar < a.dim(); ar++) {
        for (size_t ac = 0; ac < a.dim(); ac++) {
            Amplitude x = a(ar, ac);
            for (size_t br = 0; br < db; br++) {
                for (size_t bc = 0; bc < db; bc++) {
                    out(ar * db + br, ac * db + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

DenseMatrix kron_chain(const std::vector<Matrix2> &factors) {
    DenseMatrix out = DenseMatrix::identity(1);
    for (const auto &f : factors) {
        out = kron(out, from_matrix2(f));
    }
    return out;
}

DenseMatrix single_qubit_operator(const Register &reg, std::string_view label, const Matrix2 &u) {
    check_size(reg);
    return local_product(reg, {{std::string(label), u}});
}

DenseMatrix gate_matrix(const Register &reg, const GateOp &op) {
    check_size(reg);
    validate_gate(op, reg);
    const size_t dim = size_t{1} << reg.size();
    switch (op.kind) {
        case GateKind::kImprint:
        case GateKind::kInverseImprint: {
            // |↑⟩⟨↑|_a ⊗ 1 + |↓⟩⟨↓|_a ⊗ X_b
            DenseMatrix m = local_product(reg, {{op.first, kProjectUp}});
            m += local_product(reg, {{op.first, kProjectDown}, {op.second, kPauliX}});
            return m;
        }
        case GateKind::kSwap: {
            // (1 + XX + YY + ZZ) / 2
            DenseMatrix m = DenseMatrix::identity(dim);
            for (const auto &p : {kPauliX, kPauliY, kPauliZ}) {
                m += local_product(reg, {{op.first, p}, {op.second, p}});
            }
            m *= 0.5;
            return m;
        }
        case GateKind::kRotateBasis:
            return local_product(reg, {{op.first, kHadamard}});
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

DenseMatrix script_matrix(const Register &reg, const std::vector<GateOp> &script) {
    check_size(reg);
    DenseMatrix total = DenseMatrix::identity(size_t{1} << reg.size());
    for (const auto &op : script) {
        total = gate_matrix(reg, op) * total;
    }
    return total;
}

PureState oracle_apply(const PureState &state, const std::vector<GateOp> &script) {
    check_size(state.reg());
    for (const auto &op : script) {
        validate_gate(op, state.reg());
    }
    std::vector<Amplitude> v(state.amplitudes().begin(), state.amplitudes().end());
    for (const auto &op : script) {
        v = gate_matrix(state.reg(), op) * v;
    }
    return PureState(state.reg(), std::move(v));
}

}  // namespace unimeas::oracle
