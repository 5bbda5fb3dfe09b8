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

#include "dqc1/iqp.h"

#include <stdexcept>

namespace dqc1 {

namespace {

void hadamard_layer(Circuit &c) {
    for (uint32_t q = 0; q < c.width(); q++) {
        c.append(Gate::h(q));
    }
}

}  // namespace

Circuit compile_iqp_from_poly(const PolyF2 &poly) {
    Circuit c(poly.n_vars());
    hadamard_layer(c);
    for (const auto &mono : poly.monomials()) {
        switch (mono.size()) {
            case 1:
                c.append(Gate::z(mono[0]));
                break;
            case 2:
                c.append(Gate::cz(mono[0], mono[1]));
                break;
            case 3:
                c.append(Gate::ccz(mono[0], mono[1], mono[2]));
                break;
            default:
                throw std::invalid_argument("monomial size must be 1, 2 or 3");
        }
    }
    hadamard_layer(c);
    return c;
}

Circuit compile_iqp_from_ising(const IsingInstance &model) {
    // Revalidates instances built field-by-field.
    IsingInstance checked(model.n_spins, model.couplings, model.fields);
    Circuit c(checked.n_spins);
    hadamard_layer(c);
    for (const auto &cp : checked.couplings) {
        c.append(Gate::cx(cp.j, cp.k));
        c.append(Gate::rz(cp.k, -2 * cp.theta));
        c.append(Gate::cx(cp.j, cp.k));
    }
    for (const auto &f : checked.fields) {
        c.append(Gate::rz(f.j, -2 * f.theta));
    }
    hadamard_layer(c);
    return c;
}

}  // namespace dqc1
