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

#ifndef DQC1_CIRCUIT_H
#define DQC1_CIRCUIT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dqc1 {

/// Gate kinds understood by the simulator.
///
/// SDG and TDG are the inverses of S and T. RZ(theta) is
/// diag(exp(-i theta/2), exp(i theta/2)) everywhere in this library.
enum class GateKind : uint8_t { H, X, Z, S, SDG, T, TDG, RZ, CZ, CCZ, CX, MCX };

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

/// A single gate application.
///
/// Layout by kind:
///   H, X, Z, S, SDG, T, TDG, RZ: targets = {q}
///   CZ: targets = {a, b}; CCZ: targets = {a, b, c}
///   CX: targets = {target}, controls = {control}
///   MCX: targets = {target}, controls = {c...}, polarities = one bit per
///        control; polarity 0 fires on |0>, polarity 1 fires on |1>.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<uint32_t> targets;
    std::vector<uint32_t> controls;
    std::vector<uint8_t> polarities;
    double theta = 0.0;

    bool operator==(const Gate &other) const = default;

    static Gate h(uint32_t q) { return {GateKind::H, {q}, {}, {}, 0.0}; }
    static Gate x(uint32_t q) { return {GateKind::X, {q}, {}, {}, 0.0}; }
    static Gate z(uint32_t q) { return {GateKind::Z, {q}, {}, {}, 0.0}; }
    static Gate s(uint32_t q) { return {GateKind::S, {q}, {}, {}, 0.0}; }
    static Gate sdg(uint32_t q) { return {GateKind::SDG, {q}, {}, {}, 0.0}; }
    static Gate t(uint32_t q) { return {GateKind::T, {q}, {}, {}, 0.0}; }
    static Gate tdg(uint32_t q) { return {GateKind::TDG, {q}, {}, {}, 0.0}; }
    static Gate rz(uint32_t q, double theta) { return {GateKind::RZ, {q}, {}, {}, theta}; }
    static Gate cz(uint32_t a, uint32_t b) { return {GateKind::CZ, {a, b}, {}, {}, 0.0}; }
    static Gate ccz(uint32_t a, uint32_t b, uint32_t c) { return {GateKind::CCZ, {a, b, c}, {}, {}, 0.0}; }
    static Gate cx(uint32_t control, uint32_t target) { return {GateKind::CX, {target}, {control}, {}, 0.0}; }
    static Gate mcx(uint32_t target, std::vector<uint32_t> controls, std::vector<uint8_t> polarities) {
        return {GateKind::MCX, {target}, std::move(controls), std::move(polarities), 0.0};
    }

    /// The inverse gate.
    Gate inverse() const;

    /// Throws std::invalid_argument if the gate is malformed for a circuit of
    /// the given width.
    void validate(uint32_t width) const;

    /// Same gate acting on qubits shifted up by `offset`.
    Gate shifted(uint32_t offset) const;

    std::string str() const;
};

/// An ordered gate list over `width` qubits. Gates apply left to right.
///
/// Qubit 0 is the most significant bit of a basis index, so in a DQC1
/// circuit on n+1 qubits the clean qubit occupies the top half of the index
/// space.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(uint32_t width) : width_(width) {}
    Circuit(uint32_t width, std::vector<Gate> gates);

    uint32_t width() const { return width_; }
    const std::vector<Gate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    /// Validates and appends.
    Circuit &append(Gate gate);
    /// Appends every gate of `other`, shifted up by `offset` qubits.
    Circuit &append_shifted(const Circuit &other, uint32_t offset);

    bool operator==(const Circuit &other) const = default;

    std::string str() const;

   private:
    uint32_t width_ = 0;
    std::vector<Gate> gates_;
};

/// Gate-reversed circuit with every gate inverted.
Circuit adjoint(const Circuit &circuit);

}  // namespace dqc1

#endif  // DQC1_CIRCUIT_H
