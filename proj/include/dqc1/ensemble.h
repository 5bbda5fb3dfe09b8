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

#ifndef DQC1_ENSEMBLE_H
#define DQC1_ENSEMBLE_H

#include <cstdint>
#include <filesystem>
#include <random>
#include <string_view>

#include "dqc1/circuit.h"
#include "dqc1/hardness.h"

namespace dqc1 {

/// Built-in circuit families.
///
///   iqp:        worst-case embedding of a random degree-3 IQP circuit
///               (depth = monomial count, 0 for 2n)
///   ising:      worst-case embedding of a random Ising IQP circuit
///   htcx:       random {H, T, CX} circuit on n+1 qubits (depth = gate count,
///               0 for 8(n+1))
///   postselect: alternating U1, U2 built from random {H, T, CX} circuits V
///               on n qubits (n >= 2)
enum class EnsembleKind { kIqp, kIsing, kHtcx, kPostselect };

EnsembleKind ensemble_kind_from_name(std::string_view name);
std::string_view ensemble_kind_name(EnsembleKind kind);

/// Random circuit of `gates` gates drawn uniformly from {H, T, CX}.
Circuit random_htcx_circuit(uint32_t width, uint32_t gates, std::mt19937_64 &rng);

Ensemble make_random_ensemble(EnsembleKind kind, uint32_t n, uint32_t count, uint32_t depth, uint64_t seed);

/// Every *.json circuit in `dir`, sorted by file name.
Ensemble load_ensemble_dir(const std::filesystem::path &dir);

/// `random:<kind>:<n>:<count>:<depth>:<seed>` or `dir:<path>`.
Ensemble ensemble_from_spec(std::string_view spec);

}  // namespace dqc1

#endif  // DQC1_ENSEMBLE_H
