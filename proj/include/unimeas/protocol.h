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

#include "unimeas/gates.h"
#include "unimeas/statevec.h"

namespace unimeas {

/// Operands of an environment-corrected measurement.
struct MeasurementSpec {
    std::string signal;
    std::string observer;
    std::vector<std::string> environment;  // e1 … eN
    Basis basis = Basis::kZ;
};

inline constexpr double kReadinessTolerance = 1e-9;

/// [Imprint(s,e), Swap(o,e)].
std::vector<GateOp> uncorrected_script(const std::string &signal, const std::string &observer,
                                       const std::string &environment);

/// [Swap(o,eN), InverseImprint(e2,e1), Imprint(s,e1), Swap(o,e1)], conjugated by
/// rotate_basis on every touched qubit when the basis is X.
std::vector<GateOp> corrected_script(const MeasurementSpec &spec);

/// Imprint(s,o), conjugated by rotate_basis on s and o when the basis is X.
std::vector<GateOp> ideal_script(const std::string &signal, const std::string &observer, Basis basis);

/// Takes |ψ⟩ₛ|φ⟩ₒ(χ↑|↑⟩+χ↓|↓⟩)ₑ to (χ↑|Ψ⟩ₛₒ + χ↓|Ψ̄⟩ₛₒ)|φ⟩ₑ.
PureState uncorrected_measure(const PureState &state, const std::string &signal, const std::string &observer,
                              const std::string &environment);

/// Throws kNotGhz unless the environment labels jointly split off from the
/// rest of the state as Σ_k χ_k|k…k⟩ in the spec's basis.
void check_ghz_environment(const PureState &state, const MeasurementSpec &spec,
                           double tol = kReadinessTolerance);

/// Uses one unit of the environment's correlation to correlate signal and
/// observer perfectly: (Σᵢψᵢ|i⟩ₛ)|φ⟩ₒ(Σₖχₖ|k…k⟩ₑ) becomes
/// (Σᵢψᵢ|ii⟩ₛₒ)(Σₖχₖ|k⟩^⊗(N−1))|φ⟩_{eN}.
///
/// Requires N ≥ 2. For N = 2 the redundant copy e2 and the dump slot eN are the
/// same qubit and the correction does not succeed; the script still runs.
PureState corrected_measure(const PureState &state, const MeasurementSpec &spec,
                            double tol = kReadinessTolerance);

/// Throws kObserverNotReady unless the observer's reduced state is the
/// basis-0 state (|↑⟩ for Z, |→⟩ for X) within `tol`.
void check_observer_ready(const PureState &state, const std::string &observer, Basis basis,
                          double tol = kReadinessTolerance);

/// Measurement by an already-corrected observer, environment suppressed.
PureState ideal_measure(const PureState &state, const std::string &signal, const std::string &observer, Basis basis,
                        double tol = kReadinessTolerance);

/// "^j<observer>", the label of the j-th record of an observer.
std::string record_label(int j, const std::string &observer);

/// Register s, o1, o2, o3' with ψ on s: o1 measures s in Z, then o2 measures s
/// and o3' measures o1, both in X.
PureState run_scenario_different_basis(const QubitAmplitudes &psi);

/// As run_scenario_different_basis, but o1 is first recorded in Z by
/// ^1o1 … ^mo1. Register order: s, o1, ^1o1 … ^mo1, o2, o3'.
PureState run_scenario_redundant_records(const QubitAmplitudes &psi, int record_count);

}  // namespace unimeas
