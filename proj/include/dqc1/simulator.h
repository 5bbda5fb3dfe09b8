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

#ifndef DQC1_SIMULATOR_H
#define DQC1_SIMULATOR_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1/circuit.h"
#include "dqc1/kernels.h"

namespace dqc1 {

/// Largest width accepted for a single state vector.
inline constexpr uint32_t kMaxStateQubits = 28;

struct SimOptions {
    /// Width limit for dqc1_distribution (n + 1 qubits).
    uint32_t max_qubits = 15;
    /// Worker threads; 0 means hardware concurrency. Results do not depend
    /// on this value.
    unsigned threads = 1;
};

/// DQC1 output distribution over z in {0,1}^(n+1), indexed with the clean
/// qubit as the most significant bit.
struct Distribution {
    uint32_t n = 0;
    Eigen::VectorXd probs;

    Distribution() = default;
    Distribution(uint32_t n_mixed, Eigen::VectorXd p);

    size_t size() const { return static_cast<size_t>(probs.size()); }
    double total() const { return probs.sum(); }
    double max_prob() const { return probs.maxCoeff(); }
    /// Sum within 1e-9 of one, no negative entries.
    bool is_normalized(double tol = 1e-9) const;
    /// Every entry at most 2^-n + slack.
    bool is_anticoncentrated(double slack = 1e-12) const;
};

/// |x> for a basis index, width qubits.
StateVector basis_state(uint32_t width, uint64_t index);

/// Parses a bit string, first character = qubit 0. Throws on non-binary
/// characters or wrong length (when expected_width is nonzero).
uint64_t bits_to_index(std::string_view bits, uint32_t expected_width = 0);
std::string index_to_bits(uint64_t index, uint32_t width);

StateVector apply_circuit(StateVector psi, const Circuit &circuit);

/// f(z, U) = <z| U (|0><0| (x) I) U^dagger |z>: the squared norm of the
/// clean-qubit-0 half of U^dagger|z>.
double f_value(const Circuit &u, uint64_t z);
double f_value(const Circuit &u, std::string_view z_bits);

/// p_z(U) for the input |0><0| (x) I/2^n, computed as an average over the
/// 2^n pure inputs |0x>. Bit-identical for any thread count.
Distribution dqc1_distribution(const Circuit &u, const SimOptions &options = {});

/// <0^n| C |0^n>.
std::complex<double> amplitude_zero(const Circuit &c);

/// `count` outcomes drawn from d; deterministic in seed.
std::vector<uint64_t> sample(const Distribution &d, size_t count, uint64_t seed);

}  // namespace dqc1

#endif  // DQC1_SIMULATOR_H
