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

#ifndef DQC1_IO_H
#define DQC1_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "dqc1/circuit.h"
#include "dqc1/counting.h"

namespace dqc1 {

// File formats (JSON):
//
//   circuit: {"qubits": m, "gates": [{"g": NAME, "t": [..], "c": [..], "pol": [..], "theta": x}]}
//   poly:    {"n": n, "monomials": [[0], [1, 2], [0, 1, 2]]}
//   ising:   {"n": n, "couplings": [[j, k, theta]], "fields": [[j, theta]]}
//
// "c" is present for CX and MCX, "pol" for MCX, "theta" for RZ. Parse errors
// throw std::invalid_argument naming the offending location.

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit &circuit);

PolyF2 parse_poly(std::string_view text);
std::string serialize_poly(const PolyF2 &poly);

IsingInstance parse_ising(std::string_view text);
std::string serialize_ising(const IsingInstance &model);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace dqc1

#endif  // DQC1_IO_H
