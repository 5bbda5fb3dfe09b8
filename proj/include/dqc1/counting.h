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

#ifndef DQC1_COUNTING_H
#define DQC1_COUNTING_H

#include <cstdint>
#include <random>
#include <vector>

namespace dqc1 {

/// A polynomial over F_2 of degree at most 3, stored as its monomials.
///
/// There is no constant term: a constant only flips the sign of gap(f).
/// Monomials are kept in insertion order with their variables sorted.
class PolyF2 {
   public:
    using Monomial = std::vector<uint32_t>;

    PolyF2() = default;
    /// Sorts each monomial's variables, then validates. Throws
    /// std::invalid_argument on empty or oversized monomials, repeated
    /// variables, out-of-range variables, or duplicate monomials.
    PolyF2(uint32_t n_vars, std::vector<Monomial> monomials);

    uint32_t n_vars() const { return n_vars_; }
    const std::vector<Monomial> &monomials() const { return monomials_; }

    /// f(x), with variable i read from bit i of `assignment`.
    bool evaluate(uint64_t assignment) const;

    bool operator==(const PolyF2 &other) const = default;

   private:
    uint32_t n_vars_ = 0;
    std::vector<Monomial> monomials_;
};

/// Ising instance with real (angle) couplings and fields.
struct IsingInstance {
    struct Coupling {
        uint32_t j;
        uint32_t k;
        double theta;
        bool operator==(const Coupling &) const = default;
    };
    struct Field {
        uint32_t j;
        double theta;
        bool operator==(const Field &) const = default;
    };

    IsingInstance() = default;
    /// Normalizes each coupling to j < k, then validates. Rejects
    /// self-couplings, repeated pairs or fields, and out-of-range spins.
    IsingInstance(uint32_t n_spins, std::vector<Coupling> couplings, std::vector<Field> fields);

    uint32_t n_spins = 0;
    std::vector<Coupling> couplings;
    std::vector<Field> fields;

    /// Sum of theta_jk s_j s_k + theta_j s_j, with s_q = (-1)^(bit q of x).
    double energy(uint64_t assignment) const;

    bool operator==(const IsingInstance &) const = default;
};

/// Random degree-<=3 polynomial with `terms` distinct monomials (fewer if
/// there are not enough distinct ones). Sizes 1, 2, 3 are drawn uniformly.
PolyF2 random_poly(uint32_t n_vars, uint32_t terms, std::mt19937_64 &rng);

/// Random Ising instance: every pair coupled with probability 1/2, every
/// spin given a field with probability 1/2, angles uniform in [-pi, pi).
IsingInstance random_ising(uint32_t n_spins, std::mt19937_64 &rng);

}  // namespace dqc1

#endif  // DQC1_COUNTING_H
