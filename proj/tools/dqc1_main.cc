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

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "dqc1/circuit.h"
#include "dqc1/ensemble.h"
#include "dqc1/hardness.h"
#include "dqc1/io.h"
#include "dqc1/iqp.h"
#include "dqc1/oracles.h"
#include "dqc1/report.h"
#include "dqc1/simulator.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBoundViolation = 2;

constexpr const char *kEnsembleHelp =
    "Ensemble: random:<kind>:<n>:<count>:<depth>:<seed> with kind in {iqp, ising, htcx, postselect}, "
    "or dir:<path> of circuit .json files";

struct Options {
    unsigned threads = 1;
    uint32_t max_qubits = 15;

    std::string circuit_file;
    std::string poly_file;
    std::string model_file;
    std::string out;
    std::string out1;
    std::string out2;
    std::string z;
    size_t count = 1000;
    uint64_t seed = 1;
    std::string ensemble = "random:htcx:4:50:40:1";
    std::optional<std::string> sampler;
    double eps = 1.0 / 36;
    double delta = 1.0 / 6;
    double eta = 1.0 / 100;
    bool json = false;
};

dqc1::Circuit load_circuit(const std::string &path) { return dqc1::parse_circuit(dqc1::read_text_file(path)); }

dqc1::SimOptions sim_options(const Options &o) { return {o.max_qubits, o.threads}; }

void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        dqc1::write_text_file(path, text);
    }
}

int run_gap(const Options &o) {
    std::cout << dqc1::gap(dqc1::parse_poly(dqc1::read_text_file(o.poly_file))) << "\n";
    return kExitPass;
}

int run_ising_z(const Options &o) {
    auto model = dqc1::parse_ising(dqc1::read_text_file(o.model_file));
    std::cout << dqc1::format_complex(dqc1::ising_partition_function(model)) << "\n";
    return kExitPass;
}

int run_compile_iqp(const Options &o) {
    if (o.poly_file.empty() == o.model_file.empty()) {
        throw std::invalid_argument("compile-iqp needs exactly one of --poly or --model");
    }
    dqc1::Circuit c = o.poly_file.empty()
                          ? dqc1::compile_iqp_from_ising(dqc1::parse_ising(dqc1::read_text_file(o.model_file)))
                          : dqc1::compile_iqp_from_poly(dqc1::parse_poly(dqc1::read_text_file(o.poly_file)));
    emit(o.out, dqc1::serialize_circuit(c) + "\n");
    return kExitPass;
}

int run_iqp_amp(const Options &o) {
    std::cout << dqc1::format_complex(dqc1::amplitude_zero(load_circuit(o.circuit_file))) << "\n";
    return kExitPass;
}

int run_f_value(const Options &o) {
    std::cout << dqc1::format_real(dqc1::f_value(load_circuit(o.circuit_file), o.z)) << "\n";
    return kExitPass;
}

int run_dqc1_dist(const Options &o) {
    auto d = dqc1::dqc1_distribution(load_circuit(o.circuit_file), sim_options(o));
    emit(o.out, dqc1::format_distribution_csv(d));
    if (!d.is_normalized() || !d.is_anticoncentrated()) {
        std::cerr << "dqc1-dist: distribution violates normalization or the 2^-n bound\n";
        return kExitBoundViolation;
    }
    return kExitPass;
}

int run_embed_iqp(const Options &o) {
    dqc1::write_text_file(o.out, dqc1::serialize_circuit(dqc1::build_worst_case_embedding(load_circuit(o.circuit_file))));
    return kExitPass;
}

int run_embed_postselect(const Options &o) {
    auto [u1, u2] = dqc1::build_postselection_pair(load_circuit(o.circuit_file));
    dqc1::write_text_file(o.out1, dqc1::serialize_circuit(u1));
    dqc1::write_text_file(o.out2, dqc1::serialize_circuit(u2));
    return kExitPass;
}

int run_sample(const Options &o) {
    auto u = load_circuit(o.circuit_file);
    auto d = dqc1::dqc1_distribution(u, sim_options(o));
    std::string out;
    for (uint64_t z : dqc1::sample(d, o.count, o.seed)) {
        out += dqc1::index_to_bits(z, u.width());
        out += '\n';
    }
    std::cout << out;
    return kExitPass;
}

int run_anticoncentration(const Options &o) {
    dqc1::ErrorBudget budget{o.eps, o.delta, 0.0};
    auto ens = dqc1::ensemble_from_spec(o.ensemble);
    auto dists = dqc1::ensemble_distributions(ens, o.threads);
    auto heavy = dqc1::heavy_set_fraction(dists, budget);
    double max_prob = 0;
    bool structural_ok = true;
    for (const auto &d : dists) {
        max_prob = std::max(max_prob, d.max_prob());
        structural_ok = structural_ok && d.is_normalized() && d.is_anticoncentrated();
    }
    const bool pass = heavy.pass && structural_ok;
    std::cout << "heavy_fraction=" << dqc1::format_real(heavy.observed) << "\n"
              << "heavy_bound=" << dqc1::format_real(heavy.bound) << "\n"
              << "max_prob=" << dqc1::format_real(max_prob) << "\n"
              << "anticoncentration_bound=" << dqc1::format_real(std::ldexp(1.0, -static_cast<int>(ens.n))) << "\n"
              << "pass=" << (pass ? "true" : "false") << "\n";
    return pass ? kExitPass : kExitBoundViolation;
}

int run_verify_chain(const Options &o) {
    dqc1::ErrorBudget budget{o.eps, o.delta, o.eta};
    budget.validate();
    auto sampler = o.sampler ? dqc1::SamplerModel::parse(*o.sampler) : dqc1::SamplerModel::mass_shift(o.eps);
    auto ens = dqc1::ensemble_from_spec(o.ensemble);
    auto report = dqc1::verify_chain(ens, sampler, budget, o.seed, o.threads);
    std::cout << (o.json ? dqc1::format_report_json(report) : dqc1::format_report(report));
    return report.pass ? kExitPass : kExitBoundViolation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact one-clean-qubit (DQC1) simulator and sampling-hardness checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores); output does not depend on it")
        ->capture_default_str();
    app.add_option("--max-qubits", o.max_qubits, "Width limit for distribution computations")->capture_default_str();

    int (*handler)(const Options &) = nullptr;
    auto sub = [&](const char *name, const char *help, int (*fn)(const Options &)) {
        auto *cmd = app.add_subcommand(name, help);
        cmd->callback([&handler, fn] { handler = fn; });
        return cmd;
    };

    auto *gap = sub("gap", "Exact gap(f) of a polynomial file", run_gap);
    gap->add_option("--poly", o.poly_file, "Polynomial file")->required();

    auto *ising = sub("ising-z", "Ising partition function, printed as re,im", run_ising_z);
    ising->add_option("--model", o.model_file, "Ising file")->required();

    auto *compile = sub("compile-iqp", "Compile a polynomial or Ising file into an IQP circuit", run_compile_iqp);
    compile->add_option("--poly", o.poly_file, "Polynomial file");
    compile->add_option("--model", o.model_file, "Ising file");
    compile->add_option("--out", o.out, "Output circuit file (default stdout)");

    auto *amp = sub("iqp-amp", "<0^n|C|0^n>, printed as re,im", run_iqp_amp);
    amp->add_option("--circuit", o.circuit_file, "Circuit file")->required();

    auto *fval = sub("f-value", "f(z,U) for one bit string z (clean qubit first)", run_f_value);
    fval->add_option("--circuit", o.circuit_file, "Circuit file")->required();
    fval->add_option("--z", o.z, "Bit string of length n+1")->required();

    auto *dist = sub("dqc1-dist", "Full DQC1 output distribution as z,probability rows", run_dqc1_dist);
    dist->add_option("--circuit", o.circuit_file, "Circuit file")->required();
    dist->add_option("--out", o.out, "CSV output file (default stdout)");

    auto *embed = sub("embed-iqp", "Worst-case embedding U of an n-qubit circuit C", run_embed_iqp);
    embed->add_option("--circuit", o.circuit_file, "Circuit file")->required();
    embed->add_option("--out", o.out, "Output circuit file")->required();

    auto *post = sub("embed-postselect", "Postselection pair (U1, U2) of an n-qubit circuit V", run_embed_postselect);
    post->add_option("--circuit", o.circuit_file, "Circuit file")->required();
    post->add_option("--out1", o.out1, "Output file for U1")->required();
    post->add_option("--out2", o.out2, "Output file for U2")->required();

    auto *smp = sub("sample", "Draw outcomes from the DQC1 distribution", run_sample);
    smp->add_option("--circuit", o.circuit_file, "Circuit file")->required();
    smp->add_option("--count", o.count, "Number of samples")->capture_default_str();
    smp->add_option("--seed", o.seed, "Random seed")->capture_default_str();

    auto *anti = sub("anticoncentration", "Heavy-set fraction against its lower bound", run_anticoncentration);
    anti->add_option("--ensemble", o.ensemble, kEnsembleHelp)->capture_default_str();
    anti->add_option("--eps", o.eps, "Total-variation budget")->capture_default_str();
    anti->add_option("--delta", o.delta, "Markov parameter")->capture_default_str();

    auto *chain = sub("verify-chain", "Run the full sampling-hardness chain and print a report", run_verify_chain);
    chain->add_option("--ensemble", o.ensemble, kEnsembleHelp)->capture_default_str();
    chain->add_option("--sampler", o.sampler, "exact | mixture:<lambda> | mass_shift:<tv> (default mass_shift:<eps>)");
    chain->add_option("--eps", o.eps, "Total-variation budget")->capture_default_str();
    chain->add_option("--delta", o.delta, "Markov parameter")->capture_default_str();
    chain->add_option("--eta", o.eta, "Relative error of the approximate counter")->capture_default_str();
    chain->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    chain->add_flag("--json", o.json, "Emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    try {
        return handler(o);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
