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

#ifndef DQC1_IQP_H
#define DQC1_IQP_H

#include "dqc1/circuit.h"
#include "dqc1/counting.h"

namespace dqc1 {

/// H on every qubit, one Z / CZ / CCZ per monomial, H on every qubit.
/// The resulting circuit C satisfies <0^n|C|0^n> = gap(f) / 2^n.
Circuit compile_iqp_from_poly(const PolyF2 &poly);

/// H on every qubit, the diagonal exp(i theta_jk Z_j Z_k) and
/// exp(i theta_j Z_j) factors, H on every qubit. The diagonal acts on basis
/// state x as exactly exp(i energy(x)), so <0^n|C|0^n> = Z / 2^n.
///
/// exp(i theta Z) is emitted as RZ(-2 theta); exp(i theta Z_j Z_k) as
/// CX(j,k) RZ_k(-2 theta) CX(j,k).
Circuit compile_iqp_from_ising(const IsingInstance &model);

}  // namespace dqc1

#endif  // DQC1_IQP_H
