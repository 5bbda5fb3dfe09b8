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

#include "dqc1/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dqc1 {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string &where, const std::string &why) {
    throw std::invalid_argument(where + ": " + why);
}

json parse_json(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string(what) + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                                    e.what());
    }
}

const json &require(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

uint32_t as_index(const json &v, const std::string &where) {
    if (!v.is_number_unsigned() || v.get<uint64_t>() > UINT32_MAX) {
        fail(where, "expected a non-negative integer, got " + v.dump());
    }
    return v.get<uint32_t>();
}

double as_real(const json &v, const std::string &where) {
    if (!v.is_number()) {
        fail(where, "expected a number, got " + v.dump());
    }
    return v.get<double>();
}

std::vector<uint32_t> as_index_list(const json &v, const std::string &where) {
    if (!v.is_array()) {
        fail(where, "expected an array");
    }
    std::vector<uint32_t> out;
    for (size_t k = 0; k < v.size(); k++) {
        out.push_back(as_index(v[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    json doc = parse_json(text, "circuit");
    uint32_t width = as_index(require(doc, "qubits", "circuit"), "circuit.qubits");
    const json &gates = require(doc, "gates", "circuit");
    if (!gates.is_array()) {
        fail("circuit.gates", "expected an array");
    }
    Circuit circuit(width);
    for (size_t k = 0; k < gates.size(); k++) {
        std::string where = "circuit.gates[" + std::to_string(k) + "]";
        const json &g = gates[k];
        const json &name = require(g, "g", where);
        if (!name.is_string()) {
            fail(where + ".g", "expected a string");
        }
        Gate gate;
        try {
            gate.kind = gate_kind_from_name(name.get<std::string>());
        } catch (const std::invalid_argument &e) {
            fail(where + ".g", e.what());
        }
        gate.targets = as_index_list(require(g, "t", where), where + ".t");
        if (g.contains("c")) {
            gate.controls = as_index_list(g["c"], where + ".c");
        }
        if (g.contains("pol")) {
            for (uint32_t p : as_index_list(g["pol"], where + ".pol")) {
                if (p > 1) {
                    fail(where + ".pol", "polarity must be 0 or 1");
                }
                gate.polarities.push_back(static_cast<uint8_t>(p));
            }
        }
        if (g.contains("theta")) {
            gate.theta = as_real(g["theta"], where + ".theta");
        }
        try {
            circuit.append(std::move(gate));
        } catch (const std::invalid_argument &e) {
            fail(where, e.what());
        }
    }
    return circuit;
}

std::string serialize_circuit(const Circuit &circuit) {
    ordered_json gates = ordered_json::array();
    for (const auto &gate : circuit.gates()) {
        ordered_json g;
        g["g"] = gate_name(gate.kind);
        g["t"] = gate.targets;
        if (gate.kind == GateKind::CX || gate.kind == GateKind::MCX) {
            g["c"] = gate.controls;
        }
        if (gate.kind == GateKind::MCX) {
            std::vector<uint32_t> pol(gate.polarities.begin(), gate.polarities.end());
            g["pol"] = pol;
        }
        if (gate.kind == GateKind::RZ) {
            g["theta"] = gate.theta;
        }
        gates.push_back(std::move(g));
    }
    ordered_json doc;
    doc["qubits"] = circuit.width();
    doc["gates"] = std::move(gates);
    return doc.dump();
}

PolyF2 parse_poly(std::string_view text) {
    json doc = parse_json(text, "poly");
    uint32_t n = as_index(require(doc, "n", "poly"), "poly.n");
    const json &monos = require(doc, "monomials", "poly");
    if (!monos.is_array()) {
        fail("poly.monomials", "expected an array");
    }
    std::vector<PolyF2::Monomial> monomials;
    for (size_t k = 0; k < monos.size(); k++) {
        monomials.push_back(as_index_list(monos[k], "poly.monomials[" + std::to_string(k) + "]"));
    }
    try {
        return PolyF2(n, std::move(monomials));
    } catch (const std::invalid_argument &e) {
        fail("poly", e.what());
    }
}

std::string serialize_poly(const PolyF2 &poly) {
    ordered_json doc;
    doc["n"] = poly.n_vars();
    doc["monomials"] = poly.monomials();
    return doc.dump();
}

IsingInstance parse_ising(std::string_view text) {
    json doc = parse_json(text, "ising");
    uint32_t n = as_index(require(doc, "n", "ising"), "ising.n");
    std::vector<IsingInstance::Coupling> couplings;
    std::vector<IsingInstance::Field> fields;
    if (doc.contains("couplings")) {
        const json &cs = doc["couplings"];
        if (!cs.is_array()) {
            fail("ising.couplings", "expected an array");
        }
        for (size_t k = 0; k < cs.size(); k++) {
            std::string where = "ising.couplings[" + std::to_string(k) + "]";
            if (!cs[k].is_array() || cs[k].size() != 3) {
                fail(where, "expected [j, k, theta]");
            }
            couplings.push_back({as_index(cs[k][0], where + "[0]"), as_index(cs[k][1], where + "[1]"),
                                 as_real(cs[k][2], where + "[2]")});
        }
    }
    if (doc.contains("fields")) {
        const json &fs = doc["fields"];
        if (!fs.is_array()) {
            fail("ising.fields", "expected an array");
        }
        for (size_t k = 0; k < fs.size(); k++) {
            std::string where = "ising.fields[" + std::to_string(k) + "]";
            if (!fs[k].is_array() || fs[k].size() != 2) {
                fail(where, "expected [j, theta]");
            }
            fields.push_back({as_index(fs[k][0], where + "[0]"), as_real(fs[k][1], where + "[1]")});
        }
    }
    try {
        return IsingInstance(n, std::move(couplings), std::move(fields));
    } catch (const std::invalid_argument &e) {
        fail("ising", e.what());
    }
}

std::string serialize_ising(const IsingInstance &model) {
    ordered_json couplings = ordered_json::array();
    for (const auto &c : model.couplings) {
        couplings.push_back(ordered_json::array({c.j, c.k, c.theta}));
    }
    ordered_json fields = ordered_json::array();
    for (const auto &f : model.fields) {
        fields.push_back(ordered_json::array({f.j, f.theta}));
    }
    ordered_json doc;
    doc["n"] = model.n_spins;
    doc["couplings"] = std::move(couplings);
    doc["fields"] = std::move(fields);
    return doc.dump();
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write " + path.string());
    }
    out << contents;
    if (!contents.empty() && contents.back() != '\n') {
        out << '\n';
    }
}

}  // namespace dqc1
