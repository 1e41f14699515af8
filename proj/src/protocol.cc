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

#include "unimeas/protocol.h"

#include <cmath>
#include <cstdio>
#include <set>

#include "unimeas/analysis.h"
#include "unimeas/error.h"

namespace unimeas {

namespace {

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

void require_distinct(const std::vector<std::string> &labels) {
    std::set<std::string> seen;
    for (const auto &label : labels) {
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::kDuplicateLabel, "measurement operand '" + label + "' used twice");
        }
    }
}

void require_present(const Register &reg, const std::vector<std::string> &labels) {
    for (const auto &label : labels) {
        reg.position(label);
    }
}

std::vector<std::string> spec_labels(const MeasurementSpec &spec) {
    std::vector<std::string> labels{spec.signal, spec.observer};
    labels.insert(labels.end(), spec.environment.begin(), spec.environment.end());
    return labels;
}

std::vector<GateOp> conjugate_x(const std::vector<GateOp> &script, const std::vector<std::string> &touched) {
    std::vector<GateOp> result;
    for (const auto &label : touched) {
        result.push_back(GateOp::rotate_basis(label));
    }
    result.insert(result.end(), script.begin(), script.end());
    for (const auto &label : touched) {
        result.push_back(GateOp::rotate_basis(label));
    }
    return result;
}

constexpr QubitAmplitudes kUp{1.0, 0.0};
const QubitAmplitudes kRight{M_SQRT1_2, M_SQRT1_2};

}  // namespace

std::vector<GateOp> uncorrected_script(const std::string &signal, const std::string &observer,
                                       const std::string &environment) {
    return {GateOp::imprint(signal, environment), GateOp::swap(observer, environment)};
}

std::vector<GateOp> corrected_script(const MeasurementSpec &spec) {
    if (spec.environment.size() < 2) {
        throw Error(ErrorCode::kInvalidArgument, "corrected measurement needs at least two environment qubits");
    }
    require_distinct(spec_labels(spec));
    const std::string &e1 = spec.environment[0];
    const std::string &e2 = spec.environment[1];
    const std::string &en = spec.environment.back();
    std::vector<GateOp> script{
        GateOp::swap(spec.observer, en),
        GateOp::inverse_imprint(e2, e1),
        GateOp::imprint(spec.signal, e1),
        GateOp::swap(spec.observer, e1),
    };
    if (spec.basis == Basis::kZ) {
        return script;
    }
    std::vector<std::string> touched{spec.signal, spec.observer, e1, e2};
    if (en != e2) {
        touched.push_back(en);
    }
    return conjugate_x(script, touched);
}

std::vector<GateOp> ideal_script(const std::string &signal, const std::string &observer, Basis basis) {
    std::vector<GateOp> script{GateOp::imprint(signal, observer)};
    if (basis == Basis::kZ) {
        return script;
    }
    return conjugate_x(script, {signal, observer});
}

PureState uncorrected_measure(const PureState &state, const std::string &signal, const std::string &observer,
                              const std::string &environment) {
    require_distinct({signal, observer, environment});
    return apply_script(state, uncorrected_script(signal, observer, environment));
}

void check_ghz_environment(const PureState &state, const MeasurementSpec &spec, double tol) {
    PureState view = state;
    if (spec.basis == Basis::kX) {
        std::vector<GateOp> rotations;
        for (const auto &label : spec.environment) {
            rotations.push_back(GateOp::rotate_basis(label));
        }
        view = apply_script(std::move(view), rotations);
    }
    if (!ghz_coefficients(view, spec.environment, tol)) {
        std::string names;
        for (const auto &label : spec.environment) {
            names += (names.empty() ? "" : ",") + label;
        }
        throw Error(ErrorCode::kNotGhz, "environment {" + names + "} is not in GHZ form in the " +
                                            std::string(1, basis_name(spec.basis)) + " basis");
    }
}

PureState corrected_measure(const PureState &state, const MeasurementSpec &spec, double tol) {
    auto script = corrected_script(spec);
    require_present(state.reg(), spec_labels(spec));
    check_ghz_environment(state, spec, tol);
    return apply_script(state, script);
}

void check_observer_ready(const PureState &state, const std::string &observer, Basis basis, double tol) {
    Matrix2 rho = reduced_density(state, observer);
    if (basis == Basis::kX) {
        // H ρ H with H the basis rotation.
        Amplitude a = rho[0][0], b = rho[0][1], c = rho[1][0], d = rho[1][1];
        rho = {{{(a + b + c + d) / 2.0, (a - b + c - d) / 2.0}, {(a + b - c - d) / 2.0, (a - b - c + d) / 2.0}}};
    }
    double deviation = std::max({std::abs(rho[0][0] - 1.0), std::abs(rho[0][1]), std::abs(rho[1][0]),
                                 std::abs(rho[1][1])});
    if (deviation > tol) {
        throw Error(ErrorCode::kObserverNotReady,
                    "observer '" + observer + "' is not in the " + (basis == Basis::kZ ? "|↑⟩" : "|→⟩") +
                        " ready state (deviation " + short_number(deviation) + ")");
    }
}

PureState ideal_measure(const PureState &state, const std::string &signal, const std::string &observer, Basis basis,
                        double tol) {
    require_distinct({signal, observer});
    require_present(state.reg(), {signal, observer});
    check_observer_ready(state, observer, basis, tol);
    return apply_script(state, ideal_script(signal, observer, basis));
}

std::string record_label(int j, const std::string &observer) {
    return "^" + std::to_string(j) + observer;
}

namespace {

PureState run_basis_mismatch_chain(const QubitAmplitudes &psi, int record_count) {
    std::vector<std::string> labels{"s", "o1"};
    std::vector<QubitAmplitudes> initial{psi, kUp};
    for (int j = 1; j <= record_count; j++) {
        labels.push_back(record_label(j, "o1"));
        initial.push_back(kUp);
    }
    labels.insert(labels.end(), {"o2", "o3'"});
    initial.insert(initial.end(), {kRight, kRight});

    PureState state = product_state(Register(labels), initial);
    state = ideal_measure(state, "s", "o1", Basis::kZ);
    for (int j = 1; j <= record_count; j++) {
        state = ideal_measure(state, "o1", record_label(j, "o1"), Basis::kZ);
    }
    state = ideal_measure(state, "s", "o2", Basis::kX);
    return ideal_measure(state, "o1", "o3'", Basis::kX);
}

}  // namespace

PureState run_scenario_different_basis(const QubitAmplitudes &psi) {
    return run_basis_mismatch_chain(psi, 0);
}

PureState run_scenario_redundant_records(const QubitAmplitudes &psi, int record_count) {
    if (record_count < 1) {
        throw Error(ErrorCode::kInvalidArgument, "record count must be at least 1");
    }
    return run_basis_mismatch_chain(psi, record_count);
}

}  // namespace unimeas
