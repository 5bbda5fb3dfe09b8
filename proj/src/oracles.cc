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

#include "dqc1/oracles.h"

#include <array>
#include <bit>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dqc1 {

namespace {

// Lane pattern of variable v < 6 inside a 64-assignment word.
constexpr std::array<uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void check_limit(uint32_t size, uint32_t limit, const char *what) {
    if (size > limit) {
        throw std::invalid_argument(std::string(what) + ": size " + std::to_string(size) + " exceeds limit " +
                                    std::to_string(limit));
    }
}

bool bit_of(uint64_t index, uint32_t qubit, uint32_t width) { return (index >> (width - 1 - qubit)) & 1; }

// Dense matrix of one gate, filled column by column from its action on |x>.
Eigen::MatrixXcd gate_matrix(const Gate &g, uint32_t width) {
    const uint64_t dim = uint64_t{1} << width;
    const double r = 1.0 / std::sqrt(2.0);
    const uint32_t t = g.targets[0];
    const uint64_t flip = uint64_t{1} << (width - 1 - t);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint64_t x = 0; x < dim; x++) {
        const bool b = bit_of(x, t, width);
        switch (g.kind) {
            case GateKind::H:
                // H|b> = (|0> + (-1)^b |1>) / sqrt 2
                m(x & ~flip, x) += r;
                m(x | flip, x) += b ? -r : r;
                break;
            case GateKind::X:
                m(x ^ flip, x) = 1;
                break;
            case GateKind::Z:
                m(x, x) = b ? -1 : 1;
                break;
            case GateKind::S:
                m(x, x) = b ? std::complex<double>(0, 1) : 1.0;
                break;
            case GateKind::SDG:
                m(x, x) = b ? std::complex<double>(0, -1) : 1.0;
                break;
            case GateKind::T:
                m(x, x) = b ? std::polar(1.0, std::numbers::pi / 4) : 1.0;
                break;
            case GateKind::TDG:
                m(x, x) = b ? std::polar(1.0, -std::numbers::pi / 4) : 1.0;
                break;
            case GateKind::RZ:
                m(x, x) = std::polar(1.0, (b ? 0.5 : -0.5) * g.theta);
                break;
            case GateKind::CZ:
            case GateKind::CCZ: {
                bool all = true;
                for (uint32_t q : g.targets) {
                    all = all && bit_of(x, q, width);
                }
                m(x, x) = all ? -1 : 1;
                break;
            }
            case GateKind::CX:
            case GateKind::MCX: {
                bool fires = true;
                for (size_t k = 0; k < g.controls.size(); k++) {
                    const bool want = g.kind == GateKind::CX || g.polarities[k] == 1;
                    fires = fires && bit_of(x, g.controls[k], width) == want;
                }
                m(fires ? x ^ flip : x, x) = 1;
                break;
            }
        }
    }
    return m;
}

}  // namespace

int64_t gap(const PolyF2 &poly, uint32_t max_vars) {
    const uint32_t n = poly.n_vars();
    check_limit(n, max_vars, "gap");
    check_limit(n, 62, "gap");
    // Assignment a = 64 * word + lane; variable v is bit v of a.
    const uint64_t words = n <= 6 ? 1 : uint64_t{1} << (n - 6);
    const uint64_t valid = n >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << n)) - 1;
    uint64_t ones = 0;
    for (uint64_t w = 0; w < words; w++) {
        auto var_word = [&](uint32_t v) -> uint64_t {
            if (v < 6) {
                return kLanePattern[v];
            }
            return ((w >> (v - 6)) & 1) ? ~uint64_t{0} : 0;
        };
        uint64_t f = 0;
        for (const auto &mono : poly.monomials()) {
            uint64_t term = ~uint64_t{0};
            for (uint32_t v : mono) {
                term &= var_word(v);
            }
            f ^= term;
        }
        ones += static_cast<uint64_t>(std::popcount(f & valid));
    }
    return (int64_t{1} << n) - 2 * static_cast<int64_t>(ones);
}

std::complex<double> ising_partition_function(const IsingInstance &model, uint32_t max_spins) {
    check_limit(model.n_spins, max_spins, "ising_partition_function");
    std::complex<double> z = 0;
    const uint64_t configs = uint64_t{1} << model.n_spins;
    for (uint64_t a = 0; a < configs; a++) {
        z += std::polar(1.0, model.energy(a));
    }
    return z;
}

Eigen::MatrixXcd unitary_matrix(const Circuit &circuit, uint32_t max_qubits) {
    check_limit(circuit.width(), max_qubits, "unitary_matrix");
    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << circuit.width());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &g : circuit.gates()) {
        u = gate_matrix(g, circuit.width()) * u;
    }
    return u;
}

Distribution density_matrix_dqc1(const Circuit &u, uint32_t max_n) {
    if (u.width() == 0) {
        throw std::invalid_argument("density_matrix_dqc1: circuit has no qubits");
    }
    const uint32_t n = u.width() - 1;
    check_limit(n, max_n, "density_matrix_dqc1");
    const Eigen::MatrixXcd unitary = unitary_matrix(u, max_n + 1);
    const auto dim = unitary.rows();
    // Clean qubit 0 is the top index bit: |0><0| (x) I covers the first half.
    Eigen::VectorXcd rho_diag = Eigen::VectorXcd::Zero(dim);
    rho_diag.head(dim / 2).setConstant(std::ldexp(1.0, -static_cast<int>(n)));
    const Eigen::MatrixXcd out = unitary * rho_diag.asDiagonal() * unitary.adjoint();
    return Distribution(n, out.diagonal().real());
}

}  // namespace dqc1
