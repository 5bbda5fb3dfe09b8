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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dqc1/parallel.h"

namespace dqc1 {

namespace {

// Target amplitude count per batched block (512 KiB of complex<double>).
constexpr uint64_t kBlockEntries = uint64_t{1} << 15;
// Fixed reduction groups: the partition never depends on the thread count.
constexpr uint64_t kReductionGroups = 64;

void check_width(uint32_t width, uint32_t limit, const char *what) {
    if (width == 0) {
        throw std::invalid_argument(std::string(what) + ": circuit has no qubits");
    }
    if (width > limit) {
        throw std::invalid_argument(std::string(what) + ": width " + std::to_string(width) +
                                    " exceeds the limit of " + std::to_string(limit) + " qubits");
    }
}

}  // namespace

Distribution::Distribution(uint32_t n_mixed, Eigen::VectorXd p) : n(n_mixed), probs(std::move(p)) {
    if (static_cast<uint64_t>(probs.size()) != (uint64_t{2} << n)) {
        throw std::invalid_argument("distribution length must be 2^(n+1)");
    }
}

bool Distribution::is_normalized(double tol) const {
    return probs.size() > 0 && probs.minCoeff() >= 0 && std::abs(total() - 1.0) <= tol;
}

bool Distribution::is_anticoncentrated(double slack) const {
    return max_prob() <= std::ldexp(1.0, -static_cast<int>(n)) + slack;
}

StateVector basis_state(uint32_t width, uint64_t index) {
    check_width(width, kMaxStateQubits, "basis_state");
    const uint64_t dim = uint64_t{1} << width;
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(dim));
    psi(static_cast<Eigen::Index>(index)) = 1.0;
    return psi;
}

uint64_t bits_to_index(std::string_view bits, uint32_t expected_width) {
    if (bits.empty() || bits.size() > 63) {
        throw std::invalid_argument("bit string must have 1 to 63 characters");
    }
    if (expected_width != 0 && bits.size() != expected_width) {
        throw std::invalid_argument("bit string '" + std::string(bits) + "' has length " +
                                    std::to_string(bits.size()) + ", expected " + std::to_string(expected_width));
    }
    uint64_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bit string '" + std::string(bits) + "' contains a non-binary character");
        }
        index = (index << 1) | static_cast<uint64_t>(ch == '1');
    }
    return index;
}

std::string index_to_bits(uint64_t index, uint32_t width) {
    std::string bits(width, '0');
    for (uint32_t q = 0; q < width; q++) {
        if (index & qubit_bit(q, width)) {
            bits[q] = '1';
        }
    }
    return bits;
}

StateVector apply_circuit(StateVector psi, const Circuit &circuit) {
    if (static_cast<uint64_t>(psi.size()) != (uint64_t{1} << circuit.width())) {
        throw std::invalid_argument("apply_circuit: state has " + std::to_string(psi.size()) +
                                    " amplitudes but the circuit acts on " + std::to_string(circuit.width()) +
                                    " qubits");
    }
    apply_circuit_inplace(psi, circuit);
    return psi;
}

double f_value(const Circuit &u, uint64_t z) {
    check_width(u.width(), kMaxStateQubits, "f_value");
    StateVector phi = apply_circuit(basis_state(u.width(), z), adjoint(u));
    const auto half = phi.size() / 2;
    return phi.head(half).squaredNorm();
}

double f_value(const Circuit &u, std::string_view z_bits) { return f_value(u, bits_to_index(z_bits, u.width())); }

Distribution dqc1_distribution(const Circuit &u, const SimOptions &options) {
    check_width(u.width(), options.max_qubits, "dqc1_distribution");
    const uint32_t n = u.width() - 1;
    const uint64_t dim = uint64_t{1} << u.width();
    const uint64_t inputs = uint64_t{1} << n;
    const uint64_t batch = std::clamp<uint64_t>(kBlockEntries / dim, 1, inputs);
    const uint64_t chunks = inputs / batch;
    const uint64_t groups = std::min(chunks, kReductionGroups);
    const uint64_t chunks_per_group = chunks / groups;

    std::vector<Eigen::VectorXd> partial(groups);
    parallel_for(groups, options.threads, [&](size_t g) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
        AmplitudeBlock block(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(batch));
        for (uint64_t c = g * chunks_per_group; c < (g + 1) * chunks_per_group; c++) {
            // Column k starts as |0 x> with x = c * batch + k; the clean
            // qubit is the top bit, so |0 x> has index x.
            block.setZero();
            for (uint64_t k = 0; k < batch; k++) {
                block(static_cast<Eigen::Index>(c * batch + k), static_cast<Eigen::Index>(k)) = 1.0;
            }
            apply_circuit_inplace(block, u);
            acc += block.cwiseAbs2().rowwise().sum();
        }
        partial[g] = std::move(acc);
    });

    Eigen::VectorXd probs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    for (const auto &p : partial) {
        probs += p;
    }
    probs /= static_cast<double>(inputs);
    return Distribution(n, std::move(probs));
}

std::complex<double> amplitude_zero(const Circuit &c) {
    check_width(c.width(), kMaxStateQubits, "amplitude_zero");
    return apply_circuit(basis_state(c.width(), 0), c)(0);
}

std::vector<uint64_t> sample(const Distribution &d, size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::discrete_distribution<uint64_t> pick(d.probs.begin(), d.probs.end());
    std::vector<uint64_t> out(count);
    for (auto &z : out) {
        z = pick(rng);
    }
    return out;
}

}  // namespace dqc1
