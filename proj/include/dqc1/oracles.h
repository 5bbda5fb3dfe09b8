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

#ifndef DQC1_ORACLES_H
#define DQC1_ORACLES_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "dqc1/circuit.h"
#include "dqc1/counting.h"
#include "dqc1/simulator.h"

namespace dqc1 {

// Brute-force reference computations. None of these touch the state-vector
// kernels, so they can check the simulator independently.

/// sum over x in {0,1}^n of (-1)^f(x), by exhaustive enumeration.
int64_t gap(const PolyF2 &poly, uint32_t max_vars = 24);

/// Z = sum over s in {+1,-1}^n of exp(i [sum theta_jk s_j s_k + sum theta_j s_j]).
std::complex<double> ising_partition_function(const IsingInstance &model, uint32_t max_spins = 20);

/// Dense 2^m x 2^m unitary of a circuit, built from per-gate matrices.
Eigen::MatrixXcd unitary_matrix(const Circuit &circuit, uint32_t max_qubits = 10);

/// diag(U (|0><0| (x) I/2^n) U^dagger) via explicit matrix conjugation.
Distribution density_matrix_dqc1(const Circuit &u, uint32_t max_n = 6);

}  // namespace dqc1

#endif  // DQC1_ORACLES_H
