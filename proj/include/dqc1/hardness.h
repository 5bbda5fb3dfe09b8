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

#ifndef DQC1_HARDNESS_H
#define DQC1_HARDNESS_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqc1/circuit.h"
#include "dqc1/simulator.h"

namespace dqc1 {

/// Constants threading the sampling-hardness argument.
///
///   eps:   total-variation budget of the classical sampler (un-halved L1).
///   delta: Markov parameter.
///   eta:   relative error of the approximate counter.
struct ErrorBudget {
    double eps = 1.0 / 36;
    double delta = 1.0 / 6;
    double eta = 1.0 / 100;

    /// Throws std::invalid_argument unless 0 < eps, 0 < delta < 1,
    /// 0 <= eta < 1 and 3 eps / delta < 1.
    void validate() const;

    /// eps / (2^(n+1) delta): the additive error separating Markov outliers
    /// and defining the heavy set.
    double additive_threshold(uint32_t n) const;

    /// (1 - 3 eps/delta) / (2 - 3 eps/delta), the lower bound on the heavy
    /// set fraction.
    double heavy_set_bound() const;

    /// Worst relative error on a heavy, non-outlier pair after counting:
    /// eta + (1 + eta)/3 = 1/3 + 4 eta/3. The chain needs this below 1/2.
    double multiplicative_slack() const;
};

/// F = 1 - delta - 1 / (2 - 3 eps/delta). Requires 0 <= eps, 0 < delta < 1
/// and 3 eps/delta < 1; F may be negative near that edge (vacuous bound).
double success_fraction_bound(double eps, double delta);
double success_fraction_bound(const ErrorBudget &budget);

/// A finite stand-in for the family of (n+1)-qubit circuits.
struct Ensemble {
    uint32_t n = 0;
    std::vector<Circuit> circuits;

    /// Non-empty and every circuit n+1 qubits wide.
    void validate() const;
};

/// The hypothetical classical sampler's output distribution q.
struct SamplerModel {
    enum class Kind { kExact, kMixture, kMassShift };

    Kind kind = Kind::kExact;
    /// Mixture weight toward uniform, or the total-variation distance to
    /// induce for mass_shift.
    double param = 0.0;

    static SamplerModel exact() { return {Kind::kExact, 0.0}; }
    static SamplerModel mixture(double lambda) { return {Kind::kMixture, lambda}; }
    static SamplerModel mass_shift(double tv) { return {Kind::kMassShift, tv}; }

    /// "exact", "mixture:<lambda>" or "mass_shift:<tv>".
    static SamplerModel parse(std::string_view text);
    std::string str() const;

    void validate() const;
};

struct BoundCheck {
    double observed = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct ChainReport {
    uint32_t n = 0;
    size_t ensemble_size = 0;
    uint64_t pairs = 0;
    ErrorBudget budget;
    std::string sampler;
    uint64_t seed = 0;

    double max_tv = 0.0;
    bool tv_ok = false;
    double max_prob = 0.0;
    bool anticoncentration_ok = false;
    bool normalization_ok = false;

    /// observed <= delta
    BoundCheck markov;
    /// observed > (1 - 3 eps/delta) / (2 - 3 eps/delta)
    BoundCheck heavy;
    /// observed > F
    BoundCheck success;

    uint64_t positive_pairs = 0;
    uint64_t positive_successes = 0;

    double slack = 0.0;
    bool slack_ok = false;

    bool pass = false;
};

/// U with U^dagger = [I (x) |0^n><0^n| + X (x) (I - |0^n><0^n|)] (I (x) C).
/// f(0^(n+1), U) = |<0^n|C|0^n>|^2.
Circuit build_worst_case_embedding(const Circuit &c);

/// (U1, U2) whose f-values at 0^(n+1) are the probabilities that the first
/// one and the first two output qubits of V|0^n> read zero. Requires n >= 2.
std::pair<Circuit, Circuit> build_postselection_pair(const Circuit &v);

/// Interval [(1-e)/(1+e) r, (1+e)/(1-e) r] for r = f2/f1.
std::pair<double, double> ratio_interval(double f1, double f2, double eps_mult);

/// Draws a, b with |f1 - a| <= e f1 and |f2 - b| <= e f2 (the first four
/// trials are the interval corners) and checks b/a against ratio_interval.
bool ratio_bounds_check(double f1, double f2, double eps_mult, size_t trials, uint64_t seed);

/// sum_z |p_z - q_z|, not halved.
double total_variation_distance(const Distribution &p, const Distribution &q);

/// |estimate - truth| <= eps_mult * truth, or < when strict.
bool check_multiplicative_error(double estimate, double truth, double eps_mult, bool strict = false);

/// exact: p. mixture(l): (1 - l) p + l uniform. mass_shift(t): moves t/2 of
/// mass from the largest entries to the smallest, with receivers capped at
/// 2^-n + t/2, so the distance is exactly t. Throws when t is infeasible.
Distribution make_noisy_distribution(const Distribution &p, const SamplerModel &model);

/// Stand-in for an approximate counter: q (1 + u) with u uniform in
/// [-eta, eta], deterministic in seed.
double approximate_count(double q, double eta, uint64_t seed);

/// Per-pair seed for approximate_count, split from a master seed.
uint64_t derive_seed(uint64_t master, uint64_t circuit_index, uint64_t z);

/// Exact distributions of every circuit, in ensemble order.
std::vector<Distribution> ensemble_distributions(const Ensemble &ens, unsigned threads = 1);

/// Fraction of (z, U) with |p_z - q_z| >= eps / (2^(n+1) delta); passes when
/// at most delta. Throws if the sampler exceeds eps in distance on any
/// circuit.
BoundCheck markov_outlier_fraction(std::span<const Distribution> dists, const SamplerModel &sampler,
                                   const ErrorBudget &budget);
BoundCheck markov_outlier_fraction(const Ensemble &ens, const SamplerModel &sampler, const ErrorBudget &budget,
                                   unsigned threads = 1);

/// |S| / (2^(n+1) |ens|) for S = {(z, U) : eps / (2^(n+1) delta) <= p_z / 3};
/// passes when strictly above heavy_set_bound().
BoundCheck heavy_set_fraction(std::span<const Distribution> dists, const ErrorBudget &budget);
BoundCheck heavy_set_fraction(const Ensemble &ens, const ErrorBudget &budget, unsigned threads = 1);

/// Runs every step of the sampling argument over every (z, U): exact p,
/// sampler q, counter estimate of q, and the final test
/// |estimate 2^n - f| < f / 2 (at f = 0, success iff the estimate is 0).
/// Reports are identical for any thread count.
ChainReport verify_chain(const Ensemble &ens, const SamplerModel &sampler, const ErrorBudget &budget, uint64_t seed,
                         unsigned threads = 1);

}  // namespace dqc1

#endif  // DQC1_HARDNESS_H
