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

#include "dqc1/circuit.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace dqc1 {

namespace {

constexpr std::array<std::string_view, 12> kGateNames = {"H",  "X", "Z",  "S",  "SDG", "T",
                                                         "TDG", "RZ", "CZ", "CCZ", "CX", "MCX"};

size_t expected_targets(GateKind kind) {
    switch (kind) {
        case GateKind::CZ:
            return 2;
        case GateKind::CCZ:
            return 3;
        default:
            return 1;
    }
}

}  // namespace

std::string_view gate_name(GateKind kind) { return kGateNames[static_cast<size_t>(kind)]; }

GateKind gate_kind_from_name(std::string_view name) {
    for (size_t k = 0; k < kGateNames.size(); k++) {
        if (kGateNames[k] == name) {
            return static_cast<GateKind>(k);
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::inverse() const {
    Gate result = *this;
    switch (kind) {
        case GateKind::S:
            result.kind = GateKind::SDG;
            break;
        case GateKind::SDG:
            result.kind = GateKind::S;
            break;
        case GateKind::T:
            result.kind = GateKind::TDG;
            break;
        case GateKind::TDG:
            result.kind = GateKind::T;
            break;
        case GateKind::RZ:
            result.theta = -theta;
            break;
        default:
            break;
    }
    return result;
}

void Gate::validate(uint32_t width) const {
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument(std::string(gate_name(kind)) + ": " + why);
    };
    if (targets.size() != expected_targets(kind)) {
        fail("expected " + std::to_string(expected_targets(kind)) + " target(s), got " +
             std::to_string(targets.size()));
    }
    switch (kind) {
        case GateKind::CX:
            if (controls.size() != 1) {
                fail("expected exactly one control");
            }
            if (!polarities.empty()) {
                fail("polarities are only allowed on MCX");
            }
            break;
        case GateKind::MCX:
            if (polarities.size() != controls.size()) {
                fail("expected one polarity per control");
            }
            for (uint8_t p : polarities) {
                if (p > 1) {
                    fail("polarity must be 0 or 1");
                }
            }
            break;
        default:
            if (!controls.empty() || !polarities.empty()) {
                fail("controls are only allowed on CX and MCX");
            }
            break;
    }
    if (kind != GateKind::RZ && theta != 0.0) {
        fail("theta is only allowed on RZ");
    }
    std::vector<uint32_t> all = targets;
    all.insert(all.end(), controls.begin(), controls.end());
    for (uint32_t q : all) {
        if (q >= width) {
            fail("qubit " + std::to_string(q) + " out of range for width " + std::to_string(width));
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        fail("qubit indices must be distinct");
    }
}

Gate Gate::shifted(uint32_t offset) const {
    Gate result = *this;
    for (auto &q : result.targets) {
        q += offset;
    }
    for (auto &q : result.controls) {
        q += offset;
    }
    return result;
}

std::string Gate::str() const {
    std::ostringstream out;
    out << gate_name(kind);
    if (kind == GateKind::RZ) {
        out << "(" << theta << ")";
    }
    for (size_t k = 0; k < controls.size(); k++) {
        out << " c" << (kind == GateKind::MCX && polarities[k] == 0 ? "!" : "") << controls[k];
    }
    for (uint32_t q : targets) {
        out << " " << q;
    }
    return out.str();
}

Circuit::Circuit(uint32_t width, std::vector<Gate> gates) : width_(width) {
    for (const auto &g : gates) {
        g.validate(width_);
    }
    gates_ = std::move(gates);
}

Circuit &Circuit::append(Gate gate) {
    gate.validate(width_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append_shifted(const Circuit &other, uint32_t offset) {
    for (const auto &g : other.gates()) {
        append(g.shifted(offset));
    }
    return *this;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "Circuit(" << width_ << ")";
    for (const auto &g : gates_) {
        out << "\n  " << g.str();
    }
    return out.str();
}

Circuit adjoint(const Circuit &circuit) {
    std::vector<Gate> gates;
    gates.reserve(circuit.size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        gates.push_back(it->inverse());
    }
    return Circuit(circuit.width(), std::move(gates));
}

}  // namespace dqc1
