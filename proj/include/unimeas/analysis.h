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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unimeas/statevec.h"

namespace unimeas {

inline constexpr double kDefaultClusterTolerance = 1e-9;

/// A tensor factor of the form Σ_k c_k |k…k⟩ over its members, after
/// optionally flipping ↑↔↓ on the members marked in `flipped`.
struct CorrelationCluster {
    std::vector<std::string> members;  // register order
    QubitAmplitudes coefficients;      // normalized, first nonzero entry real positive
    std::vector<bool> flipped;         // parallel to members; first member never flipped

    size_t size() const {
        return members.size();
    }
};

struct ClusterDecomposition {
    Register reg;
    std::vector<CorrelationCluster> clusters;  // ordered by first member
    std::vector<std::string> residual;         // register order

    const CorrelationCluster *cluster_of(std::string_view label) const;
};

/// Finest tensor factorization of `state`, keeping factors in GHZ form as
/// clusters and sending every other factor's members to the residual.
///
/// Factors are grown from the lowest unassigned qubit, adding at each step the
/// qubit whose two-qubit marginal is most correlated with the factor so far,
/// until the factor splits off within `tol` (max amplitude deviation from the
/// rank-one reconstruction). Worst case O(n²·2^n).
ClusterDecomposition find_clusters(const PureState &state, double tol = kDefaultClusterTolerance,
                                   bool allow_relabeling = true);

/// Rebuilds the state as the tensor product of the clusters, in register
/// order. Equal to the analyzed state up to global phase when the residual is
/// empty. Throws kNoLedgerValue otherwise.
PureState reassemble(const ClusterDecomposition &decomposition);

/// If `labels` jointly split off from the rest of `state` as Σ_k c_k |k…k⟩ (no
/// relabeling), returns (c_↑, c_↓), normalized.
std::optional<QubitAmplitudes> ghz_coefficients(const PureState &state, const std::vector<std::string> &labels,
                                                double tol = kDefaultClusterTolerance);

/// size − 1 when at least two coefficients exceed `tol` in modulus, else 0.
int cluster_measure(const CorrelationCluster &cluster, double tol = kDefaultClusterTolerance);

/// Sum of cluster measures. Throws kNoLedgerValue if the residual is nonempty.
int total_measure(const ClusterDecomposition &decomposition, double tol = kDefaultClusterTolerance);

struct LedgerEntry {
    std::string tag;
    ClusterDecomposition snapshot;
    int total;
};

struct CorrelationLedger {
    std::vector<LedgerEntry> entries;
};

struct LedgerOptions {
    double tol = kDefaultClusterTolerance;
    bool allow_relabeling = true;
};

/// Appends a snapshot of `state`. Only states in cluster normal form have a
/// ledger value; a nonempty residual throws kNoLedgerValue.
CorrelationLedger ledger_record(CorrelationLedger ledger, const PureState &state, std::string tag,
                                const LedgerOptions &options = {});

using LabelPair = std::pair<std::string, std::string>;

struct AgreementRow {
    std::vector<Symbol> outcome;
    double probability;
    std::vector<bool> agree;  // parallel to AgreementReport::pairs
};

struct AgreementReport {
    std::vector<LabelPair> pairs;
    std::vector<AgreementRow> rows;
    std::vector<double> aggregate;  // probability-weighted agreement per pair

    double disagreement(size_t pair) const {
        return 1.0 - aggregate[pair];
    }
};

AgreementReport agreement(const BranchSet &branches, const std::vector<LabelPair> &pairs);

/// Per branch, the symbol shared by every record subsystem, or nullopt when
/// the records are inconsistent.
std::vector<std::optional<Symbol>> recover_record(const BranchSet &branches, const std::vector<std::string> &records);

}  // namespace unimeas
