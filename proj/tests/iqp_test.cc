// Copyright 2026 The dqc1sim Authors
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

#include "dqc1/iqp.h"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "dqc1/oracles.h"
#include "dqc1/simulator.h"
#include "test_util.h"

using namespace dqc1;

TEST(compile_iqp_from_poly, empty_polynomial_is_identity) {
    auto c = compile_iqp_from_poly(PolyF2(3, {}));
    EXPECT_EQ(c.size(), 6u);
    EXPECT_NEAR(std::abs(amplitude_zero(c) - 1.0), 0.0, 1e-12);
}

TEST(compile_iqp_from_poly, linear_term_is_balanced) {
    auto c = compile_iqp_from_poly(PolyF2(1, {{0}}));
    EXPECT_EQ(c, Circuit(1, {Gate::h(0), Gate::z(0), Gate::h(0)}));
    EXPECT_NEAR(std::abs(amplitude_zero(c)), 0.0, 1e-12);
}

TEST(compile_iqp_from_poly, cubic_term) {
    auto c = compile_iqp_from_poly(PolyF2(3, {{0, 1, 2}}));
    EXPECT_EQ(c.gates()[3], Gate::ccz(0, 1, 2));
    // Only x = 111 has f = 1: gap = 7 - 1 = 6.
    EXPECT_NEAR(std::abs(amplitude_zero(c) - 6.0 / 8), 0.0, 1e-12);
}

TEST(compile_iqp_from_poly, matches_naive_gap_on_random_polynomials) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t n = 1 + trial % 12;
        auto f = random_poly(n, 1 + trial % 20, rng);
        auto amp = amplitude_zero(compile_iqp_from_poly(f)) * std::ldexp(1.0, static_cast<int>(n));
        ASSERT_NEAR(amp.real(), static_cast<double>(test_util::naive_gap(f)), 1e-9);
        ASSERT_NEAR(amp.imag(), 0.0, 1e-9);
    }
}

TEST(compile_iqp_from_ising, zero_angles) {
    auto c = compile_iqp_from_ising(IsingInstance(2, {}, {}));
    EXPECT_NEAR(std::abs(amplitude_zero(c) - 1.0), 0.0, 1e-12);
}

TEST(compile_iqp_from_ising, quarter_turn_coupling_cancels) {
    // 2 exp(i pi/2) + 2 exp(-i pi/2) = 0
    auto c = compile_iqp_from_ising(IsingInstance(2, {{0, 1, std::numbers::pi / 2}}, {}));
    EXPECT_NEAR(std::abs(amplitude_zero(c)), 0.0, 1e-12);
}

TEST(compile_iqp_from_ising, half_turn_field) {
    // exp(i pi) + exp(-i pi) = -2, amplitude -1
    auto c = compile_iqp_from_ising(IsingInstance(1, {}, {{0, std::numbers::pi}}));
    EXPECT_NEAR(std::abs(amplitude_zero(c) + 1.0), 0.0, 1e-12);
}

TEST(compile_iqp_from_ising, rejects_invalid_instance) {
    IsingInstance m;
    m.n_spins = 2;
    m.couplings = {{0, 0, 1.0}};
    EXPECT_THROW(compile_iqp_from_ising(m), std::invalid_argument);
}

TEST(compile_iqp_from_ising, diagonal_is_exact_energy_phase) {
    // H^n C H^n strips the Hadamards: the middle of the circuit must act on
    // |x> as exactly exp(i energy(x)), global phase included.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; trial++) {
        auto m = random_ising(4, rng);
        auto full = compile_iqp_from_ising(m);
        Circuit middle(4, std::vector<Gate>(full.gates().begin() + 4, full.gates().end() - 4));
        for (uint64_t x = 0; x < 16; x++) {
            auto out = apply_circuit(basis_state(4, x), middle);
            // Spin q is bit q of the assignment; qubit q is bit (3 - q) of the index.
            uint64_t assignment = 0;
            for (uint32_t q = 0; q < 4; q++) {
                assignment |= static_cast<uint64_t>((x >> (3 - q)) & 1) << q;
            }
            ASSERT_NEAR(std::abs(out(x) - std::polar(1.0, m.energy(assignment))), 0.0, 1e-12);
        }
    }
}

TEST(compile_iqp_from_ising, matches_partition_function_on_random_instances) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + trial % 10;
        auto m = random_ising(n, rng);
        auto amp = amplitude_zero(compile_iqp_from_ising(m)) * std::ldexp(1.0, static_cast<int>(n));
        ASSERT_NEAR(std::abs(amp - ising_partition_function(m)), 0.0, 1e-9);
    }
}
