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

#include "dqc1/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dqc1 {

namespace {

using Field = std::pair<std::string, std::string>;

std::string format_bool(bool b) { return b ? "true" : "false"; }

// Shared field list so the two formats never drift apart. Values are
// already valid JSON literals.
std::vector<Field> report_fields(const ChainReport &r) {
    return {
        {"n", std::to_string(r.n)},
        {"ensemble_size", std::to_string(r.ensemble_size)},
        {"pairs", std::to_string(r.pairs)},
        {"eps", format_real(r.budget.eps)},
        {"delta", format_real(r.budget.delta)},
        {"eta", format_real(r.budget.eta)},
        {"sampler", nlohmann::json(r.sampler).dump()},
        {"seed", std::to_string(r.seed)},
        {"max_tv", format_real(r.max_tv)},
        {"tv_ok", format_bool(r.tv_ok)},
        {"max_prob", format_real(r.max_prob)},
        {"anticoncentration_bound", format_real(std::ldexp(1.0, -static_cast<int>(r.n)))},
        {"anticoncentration_ok", format_bool(r.anticoncentration_ok)},
        {"normalization_ok", format_bool(r.normalization_ok)},
        {"markov_fraction", format_real(r.markov.observed)},
        {"markov_bound", format_real(r.markov.bound)},
        {"markov_ok", format_bool(r.markov.pass)},
        {"heavy_fraction", format_real(r.heavy.observed)},
        {"heavy_bound", format_real(r.heavy.bound)},
        {"heavy_ok", format_bool(r.heavy.pass)},
        {"success_fraction", format_real(r.success.observed)},
        {"success_bound", format_real(r.success.bound)},
        {"success_ok", format_bool(r.success.pass)},
        {"positive_pairs", std::to_string(r.positive_pairs)},
        {"positive_successes", std::to_string(r.positive_successes)},
        {"slack", format_real(r.slack)},
        {"slack_ok", format_bool(r.slack_ok)},
        {"pass", format_bool(r.pass)},
    };
}

}  // namespace

std::string format_real(double value) {
    if (!std::isfinite(value)) {
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    std::string s(buf);
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string format_complex(std::complex<double> value) {
    return format_real(value.real()) + "," + format_real(value.imag());
}

std::string format_report(const ChainReport &report) {
    std::string out;
    for (const auto &[key, value] : report_fields(report)) {
        out += key + "=" + value + "\n";
    }
    return out;
}

std::string format_report_json(const ChainReport &report) {
    std::string out = "{";
    bool first = true;
    for (const auto &[key, value] : report_fields(report)) {
        out += (first ? "\"" : ",\"") + key + "\":" + value;
        first = false;
    }
    return out + "}\n";
}

std::string format_distribution_csv(const Distribution &d) {
    std::string out = "z,probability\n";
    const auto width = d.n + 1;
    for (Eigen::Index z = 0; z < d.probs.size(); z++) {
        out += index_to_bits(static_cast<uint64_t>(z), width) + "," + format_real(d.probs(z)) + "\n";
    }
    return out;
}

}  // namespace dqc1
