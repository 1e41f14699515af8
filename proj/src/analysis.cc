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

#include "unimeas/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "unimeas/error.h"

namespace unimeas {

namespace {

// Gathers the bits of `x` selected by `mask` into the low bits of the result,
// preserving their relative order.
uint64_t extract_bits(uint64_t x, uint64_t mask) {
    uint64_t result = 0;
    unsigned k = 0;
    for (uint64_t m = mask; m != 0; m &= m - 1) {
        if (x & m & (~m + 1)) {
            result |= uint64_t{1} << k;
        }
        k++;
    }
    return result;
}

// Inverse of extract_bits.
uint64_t deposit_bits(uint64_t x, uint64_t mask) {
    uint64_t result = 0;
    unsigned k = 0;
    for (uint64_t m = mask; m != 0; m &= m - 1) {
        if ((x >> k) & 1) {
            result |= m & (~m + 1);
        }
        k++;
    }
    return result;
}

uint64_t mask_of(const Register &reg, const std::vector<size_t> &positions) {
    uint64_t mask = 0;
    for (size_t p : positions) {
        mask |= uint64_t{1} << reg.bit_of_position(p);
    }
    return mask;
}

struct Factor {
    std::vector<Amplitude> amplitudes;  // over the block, first member most significant
    bool exact;                         // the rank-one reconstruction is within tol everywhere
};

// Best rank-one split of `state` into (block) ⊗ (rest) through the largest
// amplitude. The block factor is normalized.
Factor split_off(const PureState &state, uint64_t block_mask, double tol) {
    const uint64_t dim = state.dimension();
    const uint64_t rest_mask = (dim - 1) & ~block_mask;
    const unsigned block_bits = static_cast<unsigned>(std::popcount(block_mask));
    auto amps = state.amplitudes();

    uint64_t pivot = 0;
    double best = -1;
    for (uint64_t i = 0; i < dim; i++) {
        double m = std::abs(amps[i]);
        if (m > best) {
            best = m;
            pivot = i;
        }
    }
    const uint64_t pivot_block = pivot & block_mask;
    const uint64_t pivot_rest = pivot & rest_mask;
    const Amplitude pivot_amp = amps[pivot];

    std::vector<Amplitude> u(uint64_t{1} << block_bits);
    for (uint64_t r = 0; r < u.size(); r++) {
        u[r] = amps[deposit_bits(r, block_mask) | pivot_rest];
    }
    std::vector<Amplitude> v(dim >> block_bits);
    for (uint64_t c = 0; c < v.size(); c++) {
        v[c] = amps[deposit_bits(c, rest_mask) | pivot_block] / pivot_amp;
    }

    bool exact = true;
    for (uint64_t i = 0; i < dim && exact; i++) {
        Amplitude predicted = u[extract_bits(i, block_mask)] * v[extract_bits(i, rest_mask)];
        exact = std::abs(amps[i] - predicted) <= tol;
    }

    double n = 0;
    for (const auto &a : u) {
        n += std::norm(a);
    }
    n = std::sqrt(n);
    for (auto &a : u) {
        a /= n;
    }
    return {std::move(u), exact};
}

// max |ρ_ab − ρ_a ⊗ ρ_b| over the two-qubit marginal.
double pair_correlation(const PureState &state, unsigned bit_a, unsigned bit_b) {
    const uint64_t ma = uint64_t{1} << bit_a;
    const uint64_t mb = uint64_t{1} << bit_b;
    Amplitude rho[4][4] = {};
    auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (i & (ma | mb)) {
            continue;
        }
        const Amplitude local[4] = {amps[i], amps[i | mb], amps[i | ma], amps[i | ma | mb]};
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                rho[r][c] += local[r] * std::conj(local[c]);
            }
        }
    }
    Amplitude rho_a[2][2] = {};
    Amplitude rho_b[2][2] = {};
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int k = 0; k < 2; k++) {
                rho_a[x][y] += rho[2 * x + k][2 * y + k];
                rho_b[x][y] += rho[2 * k + x][2 * k + y];
            }
        }
    }
    double worst = 0;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            Amplitude product = rho_a[r / 2][c / 2] * rho_b[r % 2][c % 2];
            worst = std::max(worst, std::abs(rho[r][c] - product));
        }
    }
    return worst;
}

QubitAmplitudes canonical_pair(Amplitude c0, Amplitude c1, double tol) {
    double n = std::sqrt(std::norm(c0) + std::norm(c1));
    c0 /= n;
    c1 /= n;
    Amplitude lead = std::abs(c0) > tol ? c0 : c1;
    Amplitude phase = std::conj(lead) / std::abs(lead);
    return {c0 * phase, c1 * phase};
}

// Tests whether the block factor (first member most significant) is
// Σ_k c_k |k…k⟩ after per-member flips, and fills in the cluster if so.
std::optional<CorrelationCluster> as_cluster(const Register &reg, const std::vector<size_t> &positions,
                                             const std::vector<Amplitude> &factor, double tol,
                                             bool allow_relabeling) {
    const size_t m = positions.size();
    const uint64_t all_ones = (uint64_t{1} << m) - 1;
    uint64_t low = 0;
    if (m > 1 && allow_relabeling) {
        double best = -1;
        for (uint64_t i = 0; i < factor.size(); i++) {
            if (std::abs(factor[i]) > best) {
                best = std::abs(factor[i]);
                low = i;
            }
        }
        // Keep the first member unflipped.
        if (low >> (m - 1)) {
            low ^= all_ones;
        }
    }
    const uint64_t high = low ^ all_ones;
    for (uint64_t i = 0; i < factor.size(); i++) {
        if (i != low && i != high && std::abs(factor[i]) > tol) {
            return std::nullopt;
        }
    }
    CorrelationCluster cluster;
    for (size_t k = 0; k < m; k++) {
        cluster.members.push_back(reg[positions[k]]);
        cluster.flipped.push_back(((low >> (m - 1 - k)) & 1) != 0);
    }
    cluster.coefficients = canonical_pair(factor[low], factor[high], tol);
    return cluster;
}

}  // namespace

const CorrelationCluster *ClusterDecomposition::cluster_of(std::string_view label) const {
    for (const auto &c : clusters) {
        if (std::find(c.members.begin(), c.members.end(), label) != c.members.end()) {
            return &c;
        }
    }
    return nullptr;
}

ClusterDecomposition find_clusters(const PureState &state, double tol, bool allow_relabeling) {
    const Register &reg = state.reg();
    const size_t n = reg.size();
    ClusterDecomposition result{reg, {}, {}};

    std::vector<double> correlation(n * n, -1);
    auto correlation_of = [&](size_t a, size_t b) {
        double &slot = correlation[a * n + b];
        if (slot < 0) {
            slot = pair_correlation(state, reg.bit_of_position(a), reg.bit_of_position(b));
            correlation[b * n + a] = slot;
        }
        return slot;
    };

    std::vector<bool> assigned(n, false);
    std::vector<size_t> residual_positions;
    for (size_t start = 0; start < n; start++) {
        if (assigned[start]) {
            continue;
        }
        std::vector<size_t> block{start};
        assigned[start] = true;
        Factor factor = split_off(state, mask_of(reg, block), tol);
        while (!factor.exact) {
            std::optional<size_t> next;
            double best = -1;
            for (size_t j = 0; j < n; j++) {
                if (assigned[j]) {
                    continue;
                }
                double score = 0;
                for (size_t b : block) {
                    score = std::max(score, correlation_of(b, j));
                }
                if (score > best) {
                    best = score;
                    next = j;
                }
            }
            if (!next) {
                break;
            }
            block.push_back(*next);
            assigned[*next] = true;
            std::sort(block.begin(), block.end());
            factor = split_off(state, mask_of(reg, block), tol);
        }

        auto cluster = as_cluster(reg, block, factor.amplitudes, tol, allow_relabeling);
        if (cluster) {
            result.clusters.push_back(std::move(*cluster));
        } else {
            residual_positions.insert(residual_positions.end(), block.begin(), block.end());
        }
    }
    std::sort(residual_positions.begin(), residual_positions.end());
    for (size_t p : residual_positions) {
        result.residual.push_back(reg[p]);
    }
    return result;
}

PureState reassemble(const ClusterDecomposition &decomposition) {
    if (!decomposition.residual.empty()) {
        throw Error(ErrorCode::kNoLedgerValue, "decomposition has a residual");
    }
    const Register &reg = decomposition.reg;
    std::vector<Amplitude> amps(uint64_t{1} << reg.size(), 1.0);
    for (const auto &cluster : decomposition.clusters) {
        std::vector<unsigned> bits;
        uint64_t flips = 0;
        for (size_t k = 0; k < cluster.size(); k++) {
            unsigned bit = reg.bit(cluster.members[k]);
            bits.push_back(bit);
            if (cluster.flipped[k]) {
                flips |= uint64_t{1} << bit;
            }
        }
        uint64_t mask = 0;
        for (unsigned b : bits) {
            mask |= uint64_t{1} << b;
        }
        for (uint64_t i = 0; i < amps.size(); i++) {
            uint64_t pattern = (i ^ flips) & mask;
            if (pattern == 0) {
                amps[i] *= cluster.coefficients[0];
            } else if (pattern == mask) {
                amps[i] *= cluster.coefficients[1];
            } else {
                amps[i] = 0;
            }
        }
    }
    return PureState::normalized(reg, std::move(amps));
}

std::optional<QubitAmplitudes> ghz_coefficients(const PureState &state, const std::vector<std::string> &labels,
                                                double tol) {
    const Register &reg = state.reg();
    std::set<size_t> unique;
    for (const auto &label : labels) {
        if (!unique.insert(reg.position(label)).second) {
            throw Error(ErrorCode::kDuplicateLabel, "label '" + label + "' listed twice");
        }
    }
    if (unique.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "no labels given");
    }
    std::vector<size_t> positions(unique.begin(), unique.end());
    Factor factor = split_off(state, mask_of(reg, positions), tol);
    if (!factor.exact) {
        return std::nullopt;
    }
    auto cluster = as_cluster(reg, positions, factor.amplitudes, tol, false);
    if (!cluster) {
        return std::nullopt;
    }
    return cluster->coefficients;
}

int cluster_measure(const CorrelationCluster &cluster, double tol) {
    int nonzero = 0;
    for (const auto &c : cluster.coefficients) {
        if (std::abs(c) > tol) {
            nonzero++;
        }
    }
    if (nonzero < 2) {
        return 0;
    }
    return static_cast<int>(cluster.size()) - 1;
}

int total_measure(const ClusterDecomposition &decomposition, double tol) {
    if (!decomposition.residual.empty()) {
        std::string names;
        for (const auto &label : decomposition.residual) {
            names += (names.empty() ? "" : ",") + label;
        }
        throw Error(ErrorCode::kNoLedgerValue, "subsystems {" + names + "} are not in cluster normal form");
    }
    int total = 0;
    for (const auto &cluster : decomposition.clusters) {
        total += cluster_measure(cluster, tol);
    }
    return total;
}

CorrelationLedger ledger_record(CorrelationLedger ledger, const PureState &state, std::string tag,
                                const LedgerOptions &options) {
    ClusterDecomposition snapshot = find_clusters(state, options.tol, options.allow_relabeling);
    int total = total_measure(snapshot, options.tol);
    ledger.entries.push_back({std::move(tag), std::move(snapshot), total});
    return ledger;
}

AgreementReport agreement(const BranchSet &branches, const std::vector<LabelPair> &pairs) {
    std::vector<std::pair<size_t, size_t>> positions;
    for (const auto &[a, b] : pairs) {
        positions.emplace_back(branches.reg.position(a), branches.reg.position(b));
    }
    AgreementReport report{pairs, {}, std::vector<double>(pairs.size(), 0.0)};
    for (const auto &branch : branches.branches) {
        AgreementRow row{branch.outcome, branch.probability(), {}};
        for (size_t k = 0; k < positions.size(); k++) {
            bool same = branch.outcome[positions[k].first] == branch.outcome[positions[k].second];
            row.agree.push_back(same);
            if (same) {
                report.aggregate[k] += row.probability;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<std::optional<Symbol>> recover_record(const BranchSet &branches,
                                                  const std::vector<std::string> &records) {
    if (records.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "record list is empty");
    }
    std::vector<size_t> positions;
    for (const auto &label : records) {
        positions.push_back(branches.reg.position(label));
    }
    std::vector<std::optional<Symbol>> result;
    result.reserve(branches.branches.size());
    for (const auto &branch : branches.branches) {
        Symbol first = branch.outcome[positions.front()];
        bool consistent = std::all_of(positions.begin(), positions.end(),
                                      [&](size_t p) { return branch.outcome[p] == first; });
        result.push_back(consistent ? std::optional<Symbol>(first) : std::nullopt);
    }
    return result;
}

}  // namespace unimeas
