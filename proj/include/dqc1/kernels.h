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

#ifndef DQC1_KERNELS_H
#define DQC1_KERNELS_H

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "dqc1/circuit.h"

namespace dqc1 {

template <typename Real>
using StateVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
using StateVector = StateVectorT<double>;

/// A batch of states: row i holds amplitude i of every state in the batch.
/// Row-major so that a basis row is contiguous across the batch.
template <typename Real>
using AmplitudeBlockT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using AmplitudeBlock = AmplitudeBlockT<double>;

/// Basis-index bit holding `qubit`. Qubit 0 is the most significant bit.
inline uint64_t qubit_bit(uint32_t qubit, uint32_t width) { return uint64_t{1} << (width - 1 - qubit); }

namespace internal {

/// Calls fn(i) for every i < dim with (i & fixed_mask) == fixed_value, in
/// increasing order.
template <typename Fn>
void for_each_matching(uint64_t dim, uint64_t fixed_mask, uint64_t fixed_value, Fn &&fn) {
    const uint64_t free = (dim - 1) & ~fixed_mask;
    uint64_t s = 0;
    do {
        fn(s | fixed_value);
        s = (s - free) & free;
    } while (s != 0);
}

template <typename Derived, typename Complex>
void scale_high_half(Eigen::MatrixBase<Derived> &amps, uint64_t bit, const Complex &phase) {
    const auto dim = static_cast<uint64_t>(amps.rows());
    for (uint64_t base = 0; base < dim; base += 2 * bit) {
        amps.middleRows(base + bit, bit) *= phase;
    }
}

}  // namespace internal

/// Applies one gate to every state in `amps` (rows = 2^width basis states,
/// columns = batch).
template <typename Derived>
void apply_gate(Eigen::MatrixBase<Derived> &amps, const Gate &gate, uint32_t width) {
    using Complex = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Complex>::Real;
    const uint64_t dim = uint64_t{1} << width;
    if (static_cast<uint64_t>(amps.rows()) != dim) {
        throw std::invalid_argument("amplitude rows do not match 2^width");
    }
    const uint64_t t0 = qubit_bit(gate.targets[0], width);
    switch (gate.kind) {
        case GateKind::H: {
            const Real s = Real(1) / std::sqrt(Real(2));
            for (uint64_t base = 0; base < dim; base += 2 * t0) {
                auto lo = amps.middleRows(base, t0);
                auto hi = amps.middleRows(base + t0, t0);
                lo += hi;
                hi = (lo - Real(2) * hi) * s;
                lo *= s;
            }
            break;
        }
        case GateKind::X:
            for (uint64_t base = 0; base < dim; base += 2 * t0) {
                amps.middleRows(base, t0).swap(amps.middleRows(base + t0, t0));
            }
            break;
        case GateKind::Z:
            internal::scale_high_half(amps, t0, Complex(-1, 0));
            break;
        case GateKind::S:
            internal::scale_high_half(amps, t0, Complex(0, 1));
            break;
        case GateKind::SDG:
            internal::scale_high_half(amps, t0, Complex(0, -1));
            break;
        case GateKind::T:
            internal::scale_high_half(amps, t0, std::polar(Real(1), std::numbers::pi_v<Real> / 4));
            break;
        case GateKind::TDG:
            internal::scale_high_half(amps, t0, std::polar(Real(1), -std::numbers::pi_v<Real> / 4));
            break;
        case GateKind::RZ: {
            const Complex lo_phase = std::polar(Real(1), Real(-gate.theta / 2));
            const Complex hi_phase = std::polar(Real(1), Real(gate.theta / 2));
            for (uint64_t base = 0; base < dim; base += 2 * t0) {
                amps.middleRows(base, t0) *= lo_phase;
                amps.middleRows(base + t0, t0) *= hi_phase;
            }
            break;
        }
        case GateKind::CZ:
        case GateKind::CCZ: {
            uint64_t mask = 0;
            for (uint32_t q : gate.targets) {
                mask |= qubit_bit(q, width);
            }
            internal::for_each_matching(dim, mask, mask, [&](uint64_t i) { amps.row(i) = -amps.row(i); });
            break;
        }
        case GateKind::CX:
        case GateKind::MCX: {
            uint64_t mask = t0;
            uint64_t value = 0;
            for (size_t k = 0; k < gate.controls.size(); k++) {
                const uint64_t b = qubit_bit(gate.controls[k], width);
                mask |= b;
                if (gate.kind == GateKind::CX || gate.polarities[k]) {
                    value |= b;
                }
            }
            internal::for_each_matching(dim, mask, value,
                                        [&](uint64_t i) { amps.row(i).swap(amps.row(i | t0)); });
            break;
        }
    }
}

/// Applies every gate of `circuit` in order.
template <typename Derived>
void apply_circuit_inplace(Eigen::MatrixBase<Derived> &amps, const Circuit &circuit) {
    for (const auto &gate : circuit.gates()) {
        apply_gate(amps, gate, circuit.width());
    }
}

}  // namespace dqc1

#endif  // DQC1_KERNELS_H
