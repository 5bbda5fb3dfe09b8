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

#include "dqc1/ensemble.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "dqc1/counting.h"
#include "dqc1/io.h"
#include "dqc1/iqp.h"

namespace dqc1 {

namespace {

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("ensemble spec: bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

}  // namespace

EnsembleKind ensemble_kind_from_name(std::string_view name) {
    if (name == "iqp") return EnsembleKind::kIqp;
    if (name == "ising") return EnsembleKind::kIsing;
    if (name == "htcx") return EnsembleKind::kHtcx;
    if (name == "postselect") return EnsembleKind::kPostselect;
    throw std::invalid_argument("unknown ensemble kind '" + std::string(name) + "' (iqp, ising, htcx, postselect)");
}

std::string_view ensemble_kind_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::kIqp:
            return "iqp";
        case EnsembleKind::kIsing:
            return "ising";
        case EnsembleKind::kHtcx:
            return "htcx";
        case EnsembleKind::kPostselect:
            return "postselect";
    }
    return "?";
}

Circuit random_htcx_circuit(uint32_t width, uint32_t gates, std::mt19937_64 &rng) {
    Circuit c(width);
    std::uniform_int_distribution<uint32_t> qubit(0, width - 1);
    std::uniform_int_distribution<int> kind(0, width > 1 ? 2 : 1);
    for (uint32_t k = 0; k < gates; k++) {
        switch (kind(rng)) {
            case 0:
                c.append(Gate::h(qubit(rng)));
                break;
            case 1:
                c.append(Gate::t(qubit(rng)));
                break;
            default: {
                uint32_t a = qubit(rng);
                uint32_t b = qubit(rng);
                while (b == a) {
                    b = qubit(rng);
                }
                c.append(Gate::cx(a, b));
                break;
            }
        }
    }
    return c;
}

Ensemble make_random_ensemble(EnsembleKind kind, uint32_t n, uint32_t count, uint32_t depth, uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("ensemble needs n >= 1");
    }
    if (kind == EnsembleKind::kPostselect && n < 2) {
        throw std::invalid_argument("postselect ensemble needs n >= 2");
    }
    std::mt19937_64 rng(seed);
    Ensemble ens;
    ens.n = n;
    for (uint32_t k = 0; k < count; k++) {
        switch (kind) {
            case EnsembleKind::kIqp:
                ens.circuits.push_back(
                    build_worst_case_embedding(compile_iqp_from_poly(random_poly(n, depth ? depth : 2 * n, rng))));
                break;
            case EnsembleKind::kIsing:
                ens.circuits.push_back(build_worst_case_embedding(compile_iqp_from_ising(random_ising(n, rng))));
                break;
            case EnsembleKind::kHtcx:
                ens.circuits.push_back(random_htcx_circuit(n + 1, depth ? depth : 8 * (n + 1), rng));
                break;
            case EnsembleKind::kPostselect: {
                auto [u1, u2] = build_postselection_pair(random_htcx_circuit(n, depth ? depth : 8 * n, rng));
                ens.circuits.push_back(k % 2 == 0 ? std::move(u1) : std::move(u2));
                break;
            }
        }
    }
    return ens;
}

Ensemble load_ensemble_dir(const std::filesystem::path &dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw std::invalid_argument("ensemble directory '" + dir.string() + "' does not exist");
    }
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw std::invalid_argument("ensemble directory '" + dir.string() + "' has no .json circuits");
    }
    Ensemble ens;
    for (const auto &f : files) {
        try {
            ens.circuits.push_back(parse_circuit(read_text_file(f)));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(f.string() + ": " + e.what());
        }
    }
    if (ens.circuits.front().width() < 2) {
        throw std::invalid_argument("ensemble circuits need at least 2 qubits");
    }
    ens.n = ens.circuits.front().width() - 1;
    ens.validate();
    return ens;
}

Ensemble ensemble_from_spec(std::string_view spec) {
    if (spec.starts_with("dir:")) {
        return load_ensemble_dir(std::filesystem::path(std::string(spec.substr(4))));
    }
    auto parts = split(spec, ':');
    if (parts.size() != 6 || parts[0] != "random") {
        throw std::invalid_argument("ensemble spec '" + std::string(spec) +
                                    "' must be random:<kind>:<n>:<count>:<depth>:<seed> or dir:<path>");
    }
    const auto kind = ensemble_kind_from_name(parts[1]);
    const auto n = parse_int<uint32_t>(parts[2], "n");
    const auto count = parse_int<uint32_t>(parts[3], "count");
    const auto depth = parse_int<uint32_t>(parts[4], "depth");
    const auto seed = parse_int<uint64_t>(parts[5], "seed");
    if (count == 0) {
        throw std::invalid_argument("ensemble spec: count must be positive");
    }
    return make_random_ensemble(kind, n, count, depth, seed);
}

}  // namespace dqc1
