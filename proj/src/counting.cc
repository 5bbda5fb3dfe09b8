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

#include "dqc1/counting.h"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace dqc1 {

PolyF2::PolyF2(uint32_t n_vars, std::vector<Monomial> monomials) : n_vars_(n_vars) {
    std::set<Monomial> seen;
    for (size_t m = 0; m < monomials.size(); m++) {
        auto &mono = monomials[m];
        auto where = "monomials[" + std::to_string(m) + "]: ";
        if (mono.empty() || mono.size() > 3) {
            throw std::invalid_argument(where + "size must be 1, 2 or 3, got " + std::to_string(mono.size()));
        }
        std::sort(mono.begin(), mono.end());
        if (std::adjacent_find(mono.begin(), mono.end()) != mono.end()) {
            throw std::invalid_argument(where + "repeated variable");
        }
        if (mono.back() >= n_vars) {
            throw std::invalid_argument(where + "variable " + std::to_string(mono.back()) +
                                        " out of range for " + std::to_string(n_vars) + " variables");
        }
        if (!seen.insert(mono).second) {
            throw std::invalid_argument(where + "duplicate monomial");
        }
    }
    monomials_ = std::move(monomials);
}

bool PolyF2::evaluate(uint64_t assignment) const {
    bool value = false;
    for (const auto &mono : monomials_) {
        bool term = true;
        for (uint32_t v : mono) {
            term = term && ((assignment >> v) & 1);
        }
        value ^= term;
    }
    return value;
}

IsingInstance::IsingInstance(uint32_t n, std::vector<Coupling> cs, std::vector<Field> fs)
    : n_spins(n), couplings(std::move(cs)), fields(std::move(fs)) {
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    for (auto &c : couplings) {
        if (c.j > c.k) {
            std::swap(c.j, c.k);
        }
        if (c.j == c.k) {
            throw std::invalid_argument("self-coupling on spin " + std::to_string(c.j));
        }
        if (c.k >= n_spins) {
            throw std::invalid_argument("coupling spin " + std::to_string(c.k) + " out of range for " +
                                        std::to_string(n_spins) + " spins");
        }
        if (!pairs.insert({c.j, c.k}).second) {
            throw std::invalid_argument("duplicate coupling " + std::to_string(c.j) + "," + std::to_string(c.k));
        }
    }
    std::set<uint32_t> spins;
    for (const auto &f : fields) {
        if (f.j >= n_spins) {
            throw std::invalid_argument("field spin " + std::to_string(f.j) + " out of range for " +
                                        std::to_string(n_spins) + " spins");
        }
        if (!spins.insert(f.j).second) {
            throw std::invalid_argument("duplicate field on spin " + std::to_string(f.j));
        }
    }
}

double IsingInstance::energy(uint64_t assignment) const {
    auto spin = [&](uint32_t q) { return ((assignment >> q) & 1) ? -1.0 : 1.0; };
    double e = 0;
    for (const auto &c : couplings) {
        e += c.theta * spin(c.j) * spin(c.k);
    }
    for (const auto &f : fields) {
        e += f.theta * spin(f.j);
    }
    return e;
}

PolyF2 random_poly(uint32_t n_vars, uint32_t terms, std::mt19937_64 &rng) {
    std::set<PolyF2::Monomial> chosen;
    std::vector<PolyF2::Monomial> monomials;
    std::uniform_int_distribution<uint32_t> var(0, n_vars - 1);
    std::uniform_int_distribution<uint32_t> degree(1, std::min<uint32_t>(3, n_vars));
    // Bounded retries: small n may not have `terms` distinct monomials.
    for (uint32_t attempt = 0; monomials.size() < terms && attempt < 20 * terms + 20; attempt++) {
        uint32_t d = degree(rng);
        std::set<uint32_t> vars;
        while (vars.size() < d) {
            vars.insert(var(rng));
        }
        PolyF2::Monomial mono(vars.begin(), vars.end());
        if (chosen.insert(mono).second) {
            monomials.push_back(std::move(mono));
        }
    }
    return PolyF2(n_vars, std::move(monomials));
}

IsingInstance random_ising(uint32_t n_spins, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<IsingInstance::Coupling> couplings;
    std::vector<IsingInstance::Field> fields;
    for (uint32_t j = 0; j < n_spins; j++) {
        for (uint32_t k = j + 1; k < n_spins; k++) {
            if (coin(rng)) {
                couplings.push_back({j, k, angle(rng)});
            }
        }
    }
    for (uint32_t j = 0; j < n_spins; j++) {
        if (coin(rng)) {
            fields.push_back({j, angle(rng)});
        }
    }
    return IsingInstance(n_spins, std::move(couplings), std::move(fields));
}

}  // namespace dqc1
