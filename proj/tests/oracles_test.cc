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

#include "dqc1/oracles.h"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "test_util.h"

using namespace dqc1;

TEST(gap, zero_polynomial) { EXPECT_EQ(gap(PolyF2(4, {})), 16); }

TEST(gap, linear_term_is_balanced) {
    for (uint32_t n = 1; n <= 10; n++) {
        EXPECT_EQ(gap(PolyF2(n, {{0}})), 0) << n;
    }
}

TEST(gap, single_cubic) { EXPECT_EQ(gap(PolyF2(3, {{0, 1, 2}})), 6); }

TEST(gap, matches_naive_enumeration) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; trial++) {
        uint32_t n = 1 + trial % 14;
        auto f = random_poly(n, 1 + trial % 25, rng);
        ASSERT_EQ(gap(f), test_util::naive_gap(f));
    }
}

TEST(gap, parity_matches_two_to_the_n) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t n = 1 + trial % 16;
        int64_t g = gap(random_poly(n, 10, rng));
        ASSERT_LE(std::abs(g), int64_t{1} << n);
        // 2^n is even for n >= 1, so gap is even.
        ASSERT_EQ(g % 2, 0);
    }
}

TEST(gap, size_limit) {
    EXPECT_THROW(gap(PolyF2(25, {{0}})), std::invalid_argument);
    EXPECT_THROW(gap(PolyF2(10, {{0}}), 8), std::invalid_argument);
    EXPECT_EQ(gap(PolyF2(24, {{0, 1, 23}})), (int64_t{1} << 24) - 2 * (int64_t{1} << 21));
}

TEST(ising_partition_function, zero_angles) {
    EXPECT_NEAR(std::abs(ising_partition_function(IsingInstance(3, {}, {})) - 8.0), 0.0, 1e-12);
}

TEST(ising_partition_function, quarter_turn_coupling) {
    EXPECT_NEAR(std::abs(ising_partition_function(IsingInstance(2, {{0, 1, std::numbers::pi / 2}}, {}))), 0.0,
                1e-12);
}

TEST(ising_partition_function, half_turn_field) {
    EXPECT_NEAR(std::abs(ising_partition_function(IsingInstance(1, {}, {{0, std::numbers::pi}})) + 2.0), 0.0, 1e-12);
}

TEST(ising_partition_function, negated_angles_conjugate) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; trial++) {
        uint32_t n = 1 + trial % 8;
        auto m = random_ising(n, rng);
        auto neg = m;
        for (auto &c : neg.couplings) c.theta = -c.theta;
        for (auto &f : neg.fields) f.theta = -f.theta;
        auto z = ising_partition_function(m);
        ASSERT_LE(std::abs(z), std::ldexp(1.0, static_cast<int>(n)) + 1e-9);
        ASSERT_NEAR(std::abs(ising_partition_function(neg) - std::conj(z)), 0.0, 1e-9);
    }
}

TEST(ising_partition_function, size_limit) {
    EXPECT_THROW(ising_partition_function(IsingInstance(21, {}, {})), std::invalid_argument);
}

TEST(unitary_matrix, is_unitary) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; trial++) {
        auto u = unitary_matrix(test_util::random_circuit(1 + trial % 5, 30, rng));
        ASSERT_TRUE((u * u.adjoint()).isIdentity(1e-12));
    }
}

TEST(density_matrix_dqc1, identity) {
    auto d = density_matrix_dqc1(Circuit(2));
    Eigen::Vector4d expected(0.5, 0.5, 0, 0);
    EXPECT_LT((d.probs - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(density_matrix_dqc1, hadamard_on_clean_qubit) {
    // (H (x) I)(|0><0| (x) I/2)(H (x) I) = |+><+| (x) I/2, diagonal 1/4 each.
    auto d = density_matrix_dqc1(Circuit(2, {Gate::h(0)}));
    EXPECT_LT((d.probs - Eigen::Vector4d::Constant(0.25)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(density_matrix_dqc1, size_limit) { EXPECT_THROW(density_matrix_dqc1(Circuit(8)), std::invalid_argument); }
