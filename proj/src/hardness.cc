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

#include "dqc1/hardness.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dqc1/parallel.h"

namespace dqc1 {

namespace {

// Slack for comparing a sampler's computed distance against its budget.
constexpr double kTvSlack = 1e-12;

double parse_double(std::string_view text, std::string_view what) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
}

void check_budget_ratio(double eps, double delta) {
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    if (!(eps >= 0)) {
        throw std::invalid_argument("eps must be non-negative");
    }
    if (!(3 * eps / delta < 1)) {
        throw std::invalid_argument("3 eps / delta must be below 1; the heavy-set bound is vacuous otherwise");
    }
}

void check_same_n(std::span<const Distribution> dists) {
    if (dists.empty()) {
        throw std::invalid_argument("no distributions");
    }
    for (const auto &d : dists) {
        if (d.n != dists.front().n) {
            throw std::invalid_argument("distributions disagree on n");
        }
    }
}

}  // namespace

void ErrorBudget::validate() const {
    if (!(eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
    check_budget_ratio(eps, delta);
    if (!(eta >= 0 && eta < 1)) {
        throw std::invalid_argument("eta must lie in [0, 1)");
    }
}

double ErrorBudget::additive_threshold(uint32_t n) const { return eps / (std::ldexp(2.0, static_cast<int>(n)) * delta); }

double ErrorBudget::heavy_set_bound() const {
    const double c = 3 * eps / delta;
    return (1 - c) / (2 - c);
}

double ErrorBudget::multiplicative_slack() const { return eta + (1 + eta) / 3; }

double success_fraction_bound(double eps, double delta) {
    check_budget_ratio(eps, delta);
    return 1 - delta - 1 / (2 - 3 * eps / delta);
}

double success_fraction_bound(const ErrorBudget &budget) { return success_fraction_bound(budget.eps, budget.delta); }

void Ensemble::validate() const {
    if (circuits.empty()) {
        throw std::invalid_argument("ensemble is empty");
    }
    for (size_t k = 0; k < circuits.size(); k++) {
        if (circuits[k].width() != n + 1) {
            throw std::invalid_argument("ensemble circuit " + std::to_string(k) + " has width " +
                                        std::to_string(circuits[k].width()) + ", expected " + std::to_string(n + 1));
        }
    }
}

SamplerModel SamplerModel::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    SamplerModel model;
    if (name == "exact") {
        if (colon != std::string_view::npos) {
            throw std::invalid_argument("sampler 'exact' takes no parameter");
        }
        return exact();
    }
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("sampler '" + std::string(name) + "' needs a parameter, e.g. " +
                                    std::string(name) + ":0.01");
    }
    double param = parse_double(text.substr(colon + 1), "sampler parameter");
    if (name == "mixture") {
        model = mixture(param);
    } else if (name == "mass_shift") {
        model = mass_shift(param);
    } else {
        throw std::invalid_argument("unknown sampler '" + std::string(name) + "' (exact, mixture, mass_shift)");
    }
    model.validate();
    return model;
}

std::string SamplerModel::str() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind) {
        case Kind::kExact:
            return "exact";
        case Kind::kMixture:
            out << "mixture:" << param;
            break;
        case Kind::kMassShift:
            out << "mass_shift:" << param;
            break;
    }
    return out.str();
}

void SamplerModel::validate() const {
    switch (kind) {
        case Kind::kExact:
            break;
        case Kind::kMixture:
            if (!(param >= 0 && param <= 1)) {
                throw std::invalid_argument("mixture weight must lie in [0, 1]");
            }
            break;
        case Kind::kMassShift:
            if (!(param >= 0 && param <= 2)) {
                throw std::invalid_argument("mass_shift distance must lie in [0, 2]");
            }
            break;
    }
}

Circuit build_worst_case_embedding(const Circuit &c) {
    const uint32_t n = c.width();
    Circuit dagger(n + 1);
    dagger.append_shifted(c, 1);
    // X on the clean qubit, undone when qubits 1..n are all zero.
    std::vector<uint32_t> controls(n);
    std::iota(controls.begin(), controls.end(), 1);
    dagger.append(Gate::x(0));
    dagger.append(Gate::mcx(0, std::move(controls), std::vector<uint8_t>(n, 0)));
    return adjoint(dagger);
}

std::pair<Circuit, Circuit> build_postselection_pair(const Circuit &v) {
    const uint32_t n = v.width();
    if (n < 2) {
        throw std::invalid_argument("build_postselection_pair: V needs at least 2 qubits");
    }
    Circuit dagger1(n + 1);
    dagger1.append_shifted(v, 1);
    dagger1.append(Gate::cx(1, 0));

    Circuit dagger2(n + 1);
    dagger2.append_shifted(v, 1);
    dagger2.append(Gate::x(0));
    dagger2.append(Gate::mcx(0, {1, 2}, {0, 0}));
    return {adjoint(dagger1), adjoint(dagger2)};
}

std::pair<double, double> ratio_interval(double f1, double f2, double eps_mult) {
    if (!(f1 > 0)) {
        throw std::invalid_argument("ratio bounds need f1 > 0");
    }
    if (!(f2 >= 0)) {
        throw std::invalid_argument("ratio bounds need f2 >= 0");
    }
    if (!(eps_mult >= 0 && eps_mult < 1)) {
        throw std::invalid_argument("multiplicative error must lie in [0, 1)");
    }
    const double r = f2 / f1;
    return {(1 - eps_mult) / (1 + eps_mult) * r, (1 + eps_mult) / (1 - eps_mult) * r};
}

bool ratio_bounds_check(double f1, double f2, double eps_mult, size_t trials, uint64_t seed) {
    const auto [lo, hi] = ratio_interval(f1, f2, eps_mult);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    constexpr double kRounding = 1e-12;
    for (size_t k = 0; k < trials; k++) {
        double ua = 0;
        double ub = 0;
        if (k < 4) {
            ua = (k & 1) ? 1 : -1;
            ub = (k & 2) ? 1 : -1;
        } else {
            ua = unit(rng);
            ub = unit(rng);
        }
        const double a = f1 * (1 + eps_mult * ua);
        const double b = f2 * (1 + eps_mult * ub);
        const double ratio = b / a;
        if (ratio < lo * (1 - kRounding) || ratio > hi * (1 + kRounding)) {
            return false;
        }
    }
    return true;
}

double total_variation_distance(const Distribution &p, const Distribution &q) {
    if (p.probs.size() != q.probs.size()) {
        throw std::invalid_argument("total_variation_distance: lengths " + std::to_string(p.probs.size()) + " and " +
                                    std::to_string(q.probs.size()) + " differ");
    }
    return (p.probs - q.probs).cwiseAbs().sum();
}

bool check_multiplicative_error(double estimate, double truth, double eps_mult, bool strict) {
    const double err = std::abs(estimate - truth);
    return strict ? err < eps_mult * truth : err <= eps_mult * truth;
}

Distribution make_noisy_distribution(const Distribution &p, const SamplerModel &model) {
    model.validate();
    switch (model.kind) {
        case SamplerModel::Kind::kExact:
            return p;
        case SamplerModel::Kind::kMixture: {
            const double uniform = 1.0 / static_cast<double>(p.size());
            Eigen::VectorXd q = (1 - model.param) * p.probs.array() + model.param * uniform;
            return Distribution(p.n, std::move(q));
        }
        case SamplerModel::Kind::kMassShift:
            break;
    }
    const double moved = model.param / 2;
    const double cap = std::ldexp(1.0, -static_cast<int>(p.n)) + moved;
    std::vector<size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return p.probs(a) > p.probs(b); });

    Eigen::VectorXd q = p.probs;
    double need = moved;
    size_t front = 0;
    while (need > 0) {
        if (front >= order.size()) {
            throw std::invalid_argument("mass_shift: not enough mass to move");
        }
        const double take = std::min(need, q(order[front]));
        q(order[front]) -= take;
        need -= take;
        if (need > 0) {
            front++;
        }
    }
    // Receivers come from the small end and never overlap the donors.
    need = moved;
    for (size_t back = order.size(); need > 0;) {
        if (back == 0 || back - 1 <= front) {
            throw std::invalid_argument("mass_shift: distance " + std::to_string(model.param) +
                                        " is infeasible for this distribution");
        }
        back--;
        const double give = std::min(need, std::max(0.0, cap - q(order[back])));
        q(order[back]) += give;
        need -= give;
    }
    return Distribution(p.n, std::move(q));
}

double approximate_count(double q, double eta, uint64_t seed) {
    if (!(eta >= 0 && eta < 1)) {
        throw std::invalid_argument("eta must lie in [0, 1)");
    }
    if (eta == 0) {
        return q;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-eta, eta);
    return q * (1 + u(rng));
}

uint64_t derive_seed(uint64_t master, uint64_t circuit_index, uint64_t z) {
    std::seed_seq seq{static_cast<uint32_t>(master),        static_cast<uint32_t>(master >> 32),
                      static_cast<uint32_t>(circuit_index), static_cast<uint32_t>(circuit_index >> 32),
                      static_cast<uint32_t>(z),             static_cast<uint32_t>(z >> 32)};
    std::array<uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<uint64_t>(out[0]) << 32) | out[1];
}

std::vector<Distribution> ensemble_distributions(const Ensemble &ens, unsigned threads) {
    ens.validate();
    std::vector<Distribution> dists(ens.circuits.size());
    parallel_for(dists.size(), threads, [&](size_t k) { dists[k] = dqc1_distribution(ens.circuits[k]); });
    return dists;
}

BoundCheck markov_outlier_fraction(std::span<const Distribution> dists, const SamplerModel &sampler,
                                   const ErrorBudget &budget) {
    budget.validate();
    check_same_n(dists);
    const double threshold = budget.additive_threshold(dists.front().n);
    uint64_t outliers = 0;
    uint64_t pairs = 0;
    for (size_t k = 0; k < dists.size(); k++) {
        const Distribution q = make_noisy_distribution(dists[k], sampler);
        const double tv = total_variation_distance(dists[k], q);
        if (tv > budget.eps + kTvSlack) {
            throw std::invalid_argument("sampler " + sampler.str() + " has distance " + std::to_string(tv) +
                                        " > eps on circuit " + std::to_string(k));
        }
        outliers += static_cast<uint64_t>(((dists[k].probs - q.probs).cwiseAbs().array() >= threshold).count());
        pairs += dists[k].size();
    }
    BoundCheck check;
    check.observed = static_cast<double>(outliers) / static_cast<double>(pairs);
    check.bound = budget.delta;
    check.pass = check.observed <= check.bound;
    return check;
}

BoundCheck markov_outlier_fraction(const Ensemble &ens, const SamplerModel &sampler, const ErrorBudget &budget,
                                   unsigned threads) {
    const auto dists = ensemble_distributions(ens, threads);
    return markov_outlier_fraction(dists, sampler, budget);
}

BoundCheck heavy_set_fraction(std::span<const Distribution> dists, const ErrorBudget &budget) {
    budget.validate();
    check_same_n(dists);
    const double threshold = budget.additive_threshold(dists.front().n);
    uint64_t heavy = 0;
    uint64_t pairs = 0;
    for (const auto &d : dists) {
        heavy += static_cast<uint64_t>((d.probs.array() / 3 >= threshold).count());
        pairs += d.size();
    }
    BoundCheck check;
    check.observed = static_cast<double>(heavy) / static_cast<double>(pairs);
    check.bound = budget.heavy_set_bound();
    check.pass = check.observed > check.bound;
    return check;
}

BoundCheck heavy_set_fraction(const Ensemble &ens, const ErrorBudget &budget, unsigned threads) {
    const auto dists = ensemble_distributions(ens, threads);
    return heavy_set_fraction(dists, budget);
}

ChainReport verify_chain(const Ensemble &ens, const SamplerModel &sampler, const ErrorBudget &budget, uint64_t seed,
                         unsigned threads) {
    budget.validate();
    sampler.validate();
    ens.validate();

    struct Item {
        double tv = 0;
        double max_prob = 0;
        bool normalized = false;
        bool anticoncentrated = false;
        uint64_t outliers = 0;
        uint64_t heavy = 0;
        uint64_t successes = 0;
        uint64_t positive = 0;
        uint64_t positive_successes = 0;
    };

    const uint32_t n = ens.n;
    const double threshold = budget.additive_threshold(n);
    const double scale = std::ldexp(1.0, static_cast<int>(n));
    std::vector<Item> items(ens.circuits.size());
    parallel_for(items.size(), threads, [&](size_t k) {
        Item &item = items[k];
        const Distribution p = dqc1_distribution(ens.circuits[k]);
        const Distribution q = make_noisy_distribution(p, sampler);
        item.tv = total_variation_distance(p, q);
        item.max_prob = p.max_prob();
        item.normalized = p.is_normalized();
        item.anticoncentrated = p.is_anticoncentrated();
        for (Eigen::Index z = 0; z < p.probs.size(); z++) {
            const double pz = p.probs(z);
            const double qz = q.probs(z);
            item.outliers += std::abs(pz - qz) >= threshold;
            item.heavy += pz / 3 >= threshold;
            const double estimate = approximate_count(qz, budget.eta, derive_seed(seed, k, static_cast<uint64_t>(z)));
            const double f = pz * scale;
            bool ok = false;
            if (f > 0) {
                ok = check_multiplicative_error(estimate * scale, f, 0.5, /*strict=*/true);
                item.positive++;
                item.positive_successes += ok;
            } else {
                ok = estimate == 0;
            }
            item.successes += ok;
        }
    });

    ChainReport report;
    report.n = n;
    report.ensemble_size = ens.circuits.size();
    report.budget = budget;
    report.sampler = sampler.str();
    report.seed = seed;
    report.tv_ok = true;
    report.anticoncentration_ok = true;
    report.normalization_ok = true;
    uint64_t outliers = 0;
    uint64_t heavy = 0;
    uint64_t successes = 0;
    for (const auto &item : items) {
        report.max_tv = std::max(report.max_tv, item.tv);
        report.max_prob = std::max(report.max_prob, item.max_prob);
        report.tv_ok = report.tv_ok && item.tv <= budget.eps + kTvSlack;
        report.anticoncentration_ok = report.anticoncentration_ok && item.anticoncentrated;
        report.normalization_ok = report.normalization_ok && item.normalized;
        outliers += item.outliers;
        heavy += item.heavy;
        successes += item.successes;
        report.positive_pairs += item.positive;
        report.positive_successes += item.positive_successes;
    }
    report.pairs = static_cast<uint64_t>(items.size()) << (n + 1);
    const double pairs = static_cast<double>(report.pairs);

    report.markov = {static_cast<double>(outliers) / pairs, budget.delta, false};
    report.markov.pass = report.markov.observed <= report.markov.bound;
    report.heavy = {static_cast<double>(heavy) / pairs, budget.heavy_set_bound(), false};
    report.heavy.pass = report.heavy.observed > report.heavy.bound;
    report.success = {static_cast<double>(successes) / pairs, success_fraction_bound(budget), false};
    report.success.pass = report.success.observed > report.success.bound;
    report.slack = budget.multiplicative_slack();
    report.slack_ok = report.slack < 0.5;
    report.pass = report.tv_ok && report.anticoncentration_ok && report.normalization_ok && report.markov.pass &&
                  report.heavy.pass && report.success.pass && report.slack_ok;
    return report;
}

}  // namespace dqc1
