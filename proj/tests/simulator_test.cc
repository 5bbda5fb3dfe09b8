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

#include "dqc1/simulator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "dqc1/hardness.h"
#include "dqc1/iqp.h"
#include "dqc1/oracles.h"
#include "test_util.h"

using namespace dqc1;

namespace {

Circuit identity(uint32_t width) { return Circuit(width); }

}  // namespace

TEST(indexing, qubit_zero_is_most_significant) {
    EXPECT_EQ(bits_to_index("100"), 4u);
    EXPECT_EQ(bits_to_index("001"), 1u);
    EXPECT_EQ(index_to_bits(4, 3), "100");
    for (uint64_t i = 0; i < 64; i++) {
        ASSERT_EQ(bits_to_index(index_to_bits(i, 6)), i);
    }
    auto psi = apply_circuit(basis_state(3, 0), Circuit(3, {Gate::x(0)}));
    EXPECT_EQ(psi(bits_to_index("100")), std::complex<double>(1, 0));
}

TEST(indexing, rejects_bad_bit_strings) {
    EXPECT_THROW(bits_to_index("012"), std::invalid_argument);
    EXPECT_THROW(bits_to_index("01", 3), std::invalid_argument);
    EXPECT_THROW(bits_to_index(""), std::invalid_argument);
}

TEST(apply_circuit, hadamard_on_zero) {
    auto psi = apply_circuit(basis_state(1, 0), Circuit(1, {Gate::h(0)}));
    EXPECT_NEAR(psi(0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(psi(1).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(apply_circuit, x_on_zero) {
    auto psi = apply_circuit(basis_state(1, 0), Circuit(1, {Gate::x(0)}));
    EXPECT_EQ(psi, basis_state(1, 1));
}

TEST(apply_circuit, anti_control_does_not_fire_on_one) {
    // Strings are q0 q1. Control qubit 1 set, polarity 0: no flip.
    Circuit c(2, {Gate::mcx(0, {1}, {0})});
    EXPECT_EQ(apply_circuit(basis_state(2, bits_to_index("01")), c), basis_state(2, bits_to_index("01")));
    EXPECT_EQ(apply_circuit(basis_state(2, bits_to_index("00")), c), basis_state(2, bits_to_index("10")));
    EXPECT_EQ(apply_circuit(basis_state(2, bits_to_index("10")), c), basis_state(2, bits_to_index("00")));
}

TEST(apply_circuit, mcx_polarity_patterns) {
    Circuit c(4, {Gate::mcx(3, {0, 1, 2}, {1, 0, 1})});
    for (uint64_t x = 0; x < 16; x++) {
        auto bits = index_to_bits(x, 4);
        bool fires = bits[0] == '1' && bits[1] == '0' && bits[2] == '1';
        auto expected = bits;
        if (fires) expected[3] = expected[3] == '0' ? '1' : '0';
        ASSERT_EQ(apply_circuit(basis_state(4, x), c), basis_state(4, bits_to_index(expected))) << bits;
    }
}

TEST(apply_circuit, width_mismatch) {
    EXPECT_THROW(apply_circuit(basis_state(2, 0), Circuit(3)), std::invalid_argument);
}

TEST(apply_circuit, matches_dense_unitary) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        uint32_t width = 1 + trial % 5;
        auto c = test_util::random_circuit(width, 30, rng);
        auto psi = test_util::random_state(width, rng);
        StateVector expected = unitary_matrix(c) * psi;
        ASSERT_LT((apply_circuit(psi, c) - expected).cwiseAbs().maxCoeff(), 1e-12) << c.str();
    }
}

TEST(apply_circuit, preserves_norm) {
    std::mt19937_64 rng(8);
    for (uint32_t width = 1; width <= 12; width++) {
        auto c = test_util::random_circuit(width, 200, rng);
        auto psi = test_util::random_state(width, rng);
        ASSERT_NEAR(apply_circuit(psi, c).norm(), 1.0, 1e-10);
    }
}

TEST(apply_circuit, adjoint_undoes_circuit) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; trial++) {
        uint32_t width = 1 + trial % 8;
        auto c = test_util::random_circuit(width, 60, rng);
        auto psi = test_util::random_state(width, rng);
        auto back = apply_circuit(apply_circuit(psi, c), adjoint(c));
        ASSERT_LT((back - psi).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(apply_circuit, float_scalar_kernels) {
    std::mt19937_64 rng(10);
    auto c = test_util::random_circuit(5, 40, rng);
    StateVectorT<float> psi = StateVectorT<float>::Zero(32);
    psi(0) = 1.0f;
    apply_circuit_inplace(psi, c);
    auto ref = apply_circuit(basis_state(5, 0), c);
    EXPECT_LT((psi.cast<std::complex<double>>() - ref).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(f_value, identity_clean_zero) { EXPECT_NEAR(f_value(identity(4), "0000"), 1.0, 1e-15); }

TEST(f_value, identity_clean_one) { EXPECT_NEAR(f_value(identity(4), "1000"), 0.0, 1e-15); }

TEST(f_value, stays_in_unit_interval) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; trial++) {
        auto u = test_util::random_circuit(4, 30, rng);
        double f = f_value(u, rng() % 16);
        ASSERT_GE(f, -1e-12);
        ASSERT_LE(f, 1 + 1e-12);
    }
}

TEST(f_value, length_mismatch) { EXPECT_THROW(f_value(identity(3), "01"), std::invalid_argument); }

TEST(dqc1_distribution, identity_two_mixed) {
    auto d = dqc1_distribution(identity(3));
    for (uint64_t z = 0; z < 8; z++) {
        EXPECT_NEAR(d.probs(z), z < 4 ? 0.25 : 0.0, 1e-15) << z;
    }
}

TEST(dqc1_distribution, hadamard_on_clean_qubit) {
    auto d = dqc1_distribution(Circuit(2, {Gate::h(0)}));
    for (uint64_t z = 0; z < 4; z++) {
        EXPECT_NEAR(d.probs(z), 0.25, 1e-15);
    }
}

TEST(dqc1_distribution, anticoncentrated_and_normalized) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + trial % 6;
        auto d = dqc1_distribution(test_util::random_circuit(n + 1, 50, rng));
        ASSERT_LE(d.max_prob(), std::ldexp(1.0, -static_cast<int>(n)) + 1e-12);
        ASSERT_NEAR(d.total(), 1.0, 1e-9);
    }
}

TEST(dqc1_distribution, agrees_with_f_value) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; trial++) {
        uint32_t n = 1 + trial % 7;
        auto u = test_util::random_circuit(n + 1, 40, rng);
        auto d = dqc1_distribution(u);
        for (int k = 0; k < 5; k++) {
            uint64_t z = rng() % d.size();
            ASSERT_NEAR(d.probs(z) * std::ldexp(1.0, static_cast<int>(n)), f_value(u, z), 1e-9);
        }
    }
}

TEST(dqc1_distribution, matches_density_matrix) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; trial++) {
        uint32_t n = 1 + trial % 5;
        auto u = test_util::random_circuit(n + 1, 40, rng);
        ASSERT_LT((dqc1_distribution(u).probs - density_matrix_dqc1(u).probs).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(dqc1_distribution, identical_for_any_thread_count) {
    std::mt19937_64 rng(16);
    auto u = test_util::random_circuit(11, 120, rng);
    auto one = dqc1_distribution(u, {15, 1});
    for (unsigned threads : {2u, 4u, 8u}) {
        auto many = dqc1_distribution(u, {15, threads});
        ASSERT_TRUE((one.probs.array() == many.probs.array()).all()) << threads;
    }
}

TEST(dqc1_distribution, width_limit) {
    EXPECT_THROW(dqc1_distribution(identity(16)), std::invalid_argument);
    EXPECT_THROW(dqc1_distribution(identity(5), {4, 1}), std::invalid_argument);
}

TEST(amplitude_zero, examples) {
    EXPECT_NEAR(std::abs(amplitude_zero(Circuit(1, {Gate::x(0)}))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(amplitude_zero(identity(3)) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(amplitude_zero(compile_iqp_from_poly(PolyF2(3, {{0, 1, 2}}))) - 0.75), 0.0, 1e-12);
}

TEST(sample, point_mass) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(8);
    p(5) = 1;
    for (uint64_t z : sample(Distribution(2, p), 100, 3)) {
        ASSERT_EQ(z, 5u);
    }
}

TEST(sample, uniform_frequencies) {
    Distribution d(1, Eigen::VectorXd::Constant(4, 0.25));
    const size_t count = 100000;
    std::map<uint64_t, size_t> hist;
    for (uint64_t z : sample(d, count, 42)) hist[z]++;
    const double sigma = std::sqrt(count * 0.25 * 0.75);
    double chi2 = 0;
    for (uint64_t z = 0; z < 4; z++) {
        EXPECT_LT(std::abs(hist[z] - count * 0.25), 5 * sigma) << z;
        chi2 += std::pow(hist[z] - count * 0.25, 2) / (count * 0.25);
    }
    // 3 degrees of freedom; 16.27 is the 0.999 quantile.
    EXPECT_LT(chi2, 16.27);
}

TEST(sample, deterministic_in_seed) {
    auto d = dqc1_distribution(Circuit(3, {Gate::h(0), Gate::cx(0, 1), Gate::t(1), Gate::h(1)}));
    EXPECT_EQ(sample(d, 500, 9), sample(d, 500, 9));
    EXPECT_NE(sample(d, 500, 9), sample(d, 500, 10));
}
