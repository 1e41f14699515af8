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
#include <cmath>
#include <functional>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "unimeas/error.h"

using namespace unimeas;
using namespace unimeas::testing;

namespace {

constexpr double kInvSqrt2 = M_SQRT1_2;

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(register, position_zero_is_most_significant) {
    Register reg({"s", "o", "e"});
    EXPECT_EQ(reg.bit("s"), 2u);
    EXPECT_EQ(reg.bit("e"), 0u);
    auto branches = branch_decompose(PureState::basis_state(reg, 4), uniform_basis(reg, Basis::kZ));
    ASSERT_EQ(branches.branches.size(), 1u);
    EXPECT_EQ(branches.outcome_text(branches.branches[0]), "↓↑↑");
}

TEST(register, rejects_bad_labels) {
    EXPECT_EQ(code_of([] { Register({"s", "s"}); }), ErrorCode::kDuplicateLabel);
    EXPECT_EQ(code_of([] { Register({"s", ""}); }), ErrorCode::kInvalidArgument);
    EXPECT_EQ(code_of([] { Register({"a b"}); }), ErrorCode::kInvalidArgument);
    EXPECT_EQ(code_of([] { Register({"s"}).position("o"); }), ErrorCode::kUnknownLabel);
    EXPECT_NO_THROW(Register({"^1o_1", "o3'"}));
}

TEST(pure_state, validates_amplitudes) {
    Register reg({"s"});
    EXPECT_EQ(code_of([&] { PureState(reg, {1.0, 1.0}); }), ErrorCode::kBadAmplitude);
    EXPECT_EQ(code_of([&] { PureState(reg, {1.0}); }), ErrorCode::kInvalidArgument);
    EXPECT_EQ(code_of([&] { PureState(reg, {std::nan(""), 0.0}); }), ErrorCode::kBadAmplitude);
    EXPECT_EQ(code_of([&] { PureState::normalized(reg, {0.0, 0.0}); }), ErrorCode::kBadAmplitude);
    EXPECT_NO_THROW(PureState(reg, {1.0 + 1e-10, 0.0}));
}

TEST(product_state, basis_state) {
    Register reg({"s"});
    const QubitAmplitudes pairs[] = {{1.0, 0.0}};
    auto state = product_state(reg, pairs);
    EXPECT_EQ(state[0], Amplitude(1.0));
    EXPECT_EQ(state[1], Amplitude(0.0));
}

TEST(product_state, signal_observer_composite) {
    std::mt19937_64 rng(1);
    auto psi = random_qubit(rng);
    auto phi = random_qubit(rng);
    Register reg({"s", "o"});
    const QubitAmplitudes pairs[] = {psi, phi};
    auto state = product_state(reg, pairs);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            EXPECT_LT(std::abs(state[2 * i + j] - psi[i] * phi[j]), 1e-15);
        }
    }
}

TEST(product_state, renormalizes_each_qubit) {
    Register reg({"s"});
    const QubitAmplitudes pairs[] = {{2.0, 0.0}};
    auto state = product_state(reg, pairs);
    EXPECT_EQ(state[0], Amplitude(1.0));
    EXPECT_EQ(state[1], Amplitude(0.0));
}

TEST(product_state, errors) {
    Register reg({"s", "o"});
    const QubitAmplitudes one[] = {{1.0, 0.0}};
    EXPECT_EQ(code_of([&] { product_state(reg, one); }), ErrorCode::kInvalidArgument);
    const QubitAmplitudes zero[] = {{1.0, 0.0}, {0.0, 0.0}};
    EXPECT_EQ(code_of([&] { product_state(reg, zero); }), ErrorCode::kBadAmplitude);
}

TEST(make_ghz, single_label_is_a_qubit_superposition) {
    const Amplitude chi[] = {Amplitude(3, 0), Amplitude(0, 4)};
    auto state = make_ghz({"e1"}, chi);
    EXPECT_LT(std::abs(state[0] - 0.6), 1e-15);
    EXPECT_LT(std::abs(state[1] - Amplitude(0, 0.8)), 1e-15);
}

TEST(make_ghz, three_labels) {
    const Amplitude chi[] = {1.0, 1.0};
    auto state = make_ghz({"e1", "e2", "e3"}, chi);
    for (uint64_t i = 0; i < 8; i++) {
        double expected = (i == 0 || i == 7) ? kInvSqrt2 : 0.0;
        EXPECT_NEAR(std::abs(state[i]), expected, 1e-15) << i;
    }
}

TEST(make_ghz, single_branch) {
    const Amplitude chi[] = {1.0, 0.0};
    auto state = make_ghz({"e1", "e2"}, chi);
    EXPECT_EQ(state[0], Amplitude(1.0));
    EXPECT_EQ(state.squared_norm(), 1.0);
}

TEST(make_ghz, errors) {
    const Amplitude chi[] = {1.0, 1.0};
    EXPECT_EQ(code_of([&] { make_ghz({}, chi); }), ErrorCode::kInvalidArgument);
    const Amplitude zero[] = {0.0, 0.0};
    EXPECT_EQ(code_of([&] { make_ghz({"e1", "e2"}, zero); }), ErrorCode::kBadAmplitude);
    const Amplitude three[] = {1.0, 1.0, 1.0};
    EXPECT_EQ(code_of([&] { make_ghz({"e1"}, three); }), ErrorCode::kInvalidArgument);
}

TEST(make_ghz, at_most_two_branches_proportional_to_coefficients) {
    std::mt19937_64 rng(2);
    for (size_t n = 1; n <= 8; n++) {
        auto chi = random_qubit(rng);
        auto state = make_ghz(numbered_register(n, "e").labels(), chi);
        auto branches = branch_decompose(state, uniform_basis(state.reg(), Basis::kZ));
        ASSERT_EQ(branches.branches.size(), n == 1 ? 2u : 2u);
        EXPECT_LT(std::abs(branches.branches.front().amplitude - chi[0]), 1e-15);
        EXPECT_LT(std::abs(branches.branches.back().amplitude - chi[1]), 1e-15);
    }
}

TEST(tensor, basis_kets) {
    auto up = PureState::basis_state(Register({"s"}), 0);
    auto down = PureState::basis_state(Register({"o"}), 1);
    auto joint = tensor(up, down);
    EXPECT_EQ(joint.reg(), Register({"s", "o"}));
    EXPECT_TRUE(approx_eq(joint, ket(joint.reg(), "01"), 0));
}

TEST(tensor, signal_observer_environment_setup) {
    std::mt19937_64 rng(3);
    auto psi = random_qubit(rng);
    auto phi = random_qubit(rng);
    const QubitAmplitudes p[] = {psi}, f[] = {phi}, e[] = {{1.0, 0.0}};
    auto state = tensor(tensor(product_state(Register({"s"}), p), product_state(Register({"o"}), f)),
                        product_state(Register({"e"}), e));
    ASSERT_EQ(state.dimension(), 8u);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            EXPECT_LT(std::abs(state[4 * i + 2 * j] - psi[i] * phi[j]), 1e-15);
            EXPECT_EQ(state[4 * i + 2 * j + 1], Amplitude(0.0));
        }
    }
    EXPECT_NEAR(state.squared_norm(), 1.0, 1e-15);
}

TEST(tensor, rejects_shared_labels) {
    auto a = PureState::basis_state(Register({"s"}), 0);
    EXPECT_EQ(code_of([&] { tensor(a, a); }), ErrorCode::kDuplicateLabel);
}

TEST(tensor, associative) {
    // Unit-modulus phases from {±1, ±i} multiply without rounding.
    const Amplitude phases[] = {1.0, -1.0, Amplitude(0, 1), Amplitude(0, -1)};
    for (int k = 0; k < 64; k++) {
        auto a = PureState(Register({"a"}), {phases[k % 4], 0.0});
        auto b = PureState(Register({"b", "b2"}), {0.0, 0.0, phases[(k / 4) % 4], 0.0});
        auto c = PureState(Register({"c"}), {0.0, phases[(k / 16) % 4]});
        auto left = tensor(tensor(a, b), c);
        auto right = tensor(a, tensor(b, c));
        EXPECT_EQ(left.reg(), right.reg());
        EXPECT_TRUE(std::equal(left.amplitudes().begin(), left.amplitudes().end(), right.amplitudes().begin()));
    }
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; k++) {
        auto a = random_state(Register({"a"}), rng);
        auto b = random_state(Register({"b", "b2"}), rng);
        auto c = random_state(Register({"c", "c2"}), rng);
        EXPECT_LT(max_deviation(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-15);
        EXPECT_NEAR(tensor(a, tensor(b, c)).squared_norm(), 1.0, 1e-12);
    }
}

TEST(branch_decompose, single_product_branch) {
    Register reg({"s", "o"});
    auto branches = branch_decompose(ket(reg, "00"), uniform_basis(reg, Basis::kZ));
    ASSERT_EQ(branches.branches.size(), 1u);
    EXPECT_EQ(branches.outcome_text(branches.branches[0]), "↑↑");
    EXPECT_EQ(branches.branches[0].amplitude, Amplitude(1.0));
}

TEST(branch_decompose, right_ket_in_z_basis) {
    Register reg({"s"});
    auto right = PureState(reg, {kInvSqrt2, kInvSqrt2});
    auto z = branch_decompose(right, uniform_basis(reg, Basis::kZ));
    ASSERT_EQ(z.branches.size(), 2u);
    EXPECT_EQ(z.outcome_text(z.branches[0]), "↑");
    EXPECT_EQ(z.outcome_text(z.branches[1]), "↓");
    EXPECT_NEAR(z.branches[0].amplitude.real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(z.branches[1].amplitude.real(), kInvSqrt2, 1e-15);

    auto x = branch_decompose(right, uniform_basis(reg, Basis::kX));
    ASSERT_EQ(x.branches.size(), 1u);
    EXPECT_EQ(x.outcome_text(x.branches[0]), "→");
    EXPECT_NEAR(x.branches[0].amplitude.real(), 1.0, 1e-15);
}

TEST(branch_decompose, down_ket_in_x_basis_carries_a_sign) {
    // |↓⟩ = (|→⟩ − |←⟩)/√2
    Register reg({"s"});
    auto x = branch_decompose(ket(reg, "1"), uniform_basis(reg, Basis::kX));
    ASSERT_EQ(x.branches.size(), 2u);
    EXPECT_NEAR(x.branches[0].amplitude.real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(x.branches[1].amplitude.real(), -kInvSqrt2, 1e-15);
}

TEST(branch_decompose, prunes_below_threshold) {
    Register reg({"s"});
    auto state = PureState::normalized(reg, {1.0, 1e-13});
    auto z = branch_decompose(state, uniform_basis(reg, Basis::kZ));
    EXPECT_EQ(z.branches.size(), 1u);
}

TEST(branch_decompose, basis_must_cover_register) {
    Register reg({"s", "o"});
    auto state = ket(reg, "00");
    EXPECT_EQ(code_of([&] { branch_decompose(state, {{"s", Basis::kZ}}); }), ErrorCode::kRegisterMismatch);
    EXPECT_EQ(code_of([&] { branch_decompose(state, {{"s", Basis::kZ}, {"x", Basis::kZ}}); }),
              ErrorCode::kRegisterMismatch);
}

TEST(branch_decompose, round_trip_sorted_and_normalized) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + trial % 6;
        Register reg = numbered_register(n);
        auto state = random_state(reg, rng);
        BasisChoice basis;
        for (const auto &label : reg.labels()) {
            basis[label] = (rng() & 1) ? Basis::kX : Basis::kZ;
        }
        auto branches = branch_decompose(state, basis);
        EXPECT_NEAR(branches.total_probability(), 1.0, 1e-9);
        for (size_t k = 1; k < branches.branches.size(); k++) {
            EXPECT_LT(branches.branches[k - 1].outcome, branches.branches[k].outcome);
        }
        EXPECT_LT(max_deviation(reconstruct(branches), state), 1e-12);
    }
}

TEST(approx_eq, examples) {
    Register reg({"s"});
    auto up = ket(reg, "0");
    auto minus_up = PureState(reg, {-1.0, 0.0});
    EXPECT_TRUE(approx_eq(up, up, 1e-12));
    EXPECT_TRUE(approx_eq(up, minus_up, 1e-12, true));
    EXPECT_FALSE(approx_eq(up, minus_up, 1e-12, false));
    EXPECT_FALSE(approx_eq(up, ket(reg, "1"), 1e-12));
    EXPECT_FALSE(approx_eq(up, ket(reg, "1"), 1e-12, true));
}

TEST(approx_eq, requires_same_register) {
    auto a = PureState::basis_state(Register({"s"}), 0);
    auto b = PureState::basis_state(Register({"o"}), 0);
    EXPECT_EQ(code_of([&] { approx_eq(a, b, 1e-12); }), ErrorCode::kRegisterMismatch);
}

TEST(reduced_density, pure_and_mixed_marginals) {
    Register reg({"a", "b"});
    auto bell = PureState(reg, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
    auto rho = reduced_density(bell, "b");
    EXPECT_NEAR(rho[0][0].real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(rho[0][1]), 0.0, 1e-15);
    auto rho_up = reduced_density(ket(reg, "10"), "b");
    EXPECT_EQ(rho_up[0][0], Amplitude(1.0));
}
