// Copyright 2026 The canord Authors
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
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "canord/bench.h"
#include "canord/canary.h"
#include "canord/correlation.h"
#include "canord/noisysim.h"
#include "canord/parallel.h"
#include "canord/pipeline.h"
#include "canord/qasm.h"
#include "canord/stabsim.h"
#include "canord/transpile.h"
#include "json.hpp"

namespace {

using namespace canord;

enum ExitCode {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kSimulationError = 3,
    kEmptyStrings = 4,
};

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

int cmd_run(const std::string &config_path, const std::string &out_dir, size_t threads) {
    PipelineConfig config = load_config(config_path);
    PipelineResult result = run_pipeline(config, threads);
    write_report_files(result, out_dir);
    std::cout << render_report(report_json(result)).summary;
    std::cout << "\nwrote " << (std::filesystem::path(out_dir) / "report.json").string() << "\n";
    return kOk;
}

int cmd_canary(const std::string &in, const std::string &out, bool random, uint64_t seed) {
    Circuit c = parse_qasm(read_file(in));
    if (!c.is_basis_only()) {
        c = decompose_to_basis(c);
    }
    c.validate(true);
    Circuit canary = random ? make_random_canary(c, seed) : make_canary(c);
    emit(out, emit_qasm(canary));
    return kOk;
}

int cmd_simulate(const std::string &in, const std::string &noise_path, uint64_t shots, uint64_t seed, bool ideal,
                 const std::string &format, const std::string &out, size_t threads, uint32_t max_qubits) {
    Circuit c = parse_qasm(read_file(in));
    if (!c.is_basis_only()) {
        c = decompose_to_basis(c);
    }
    c.validate(true);
    Counts counts;
    if (ideal) {
        if (is_clifford(c)) {
            counts = sample(c, shots, seed, threads);
        } else {
            counts = run_shots(c, NoiseModel::noiseless(c.num_qubits), shots, seed, {threads, max_qubits});
        }
    } else {
        NoiseParams params;
        if (!noise_path.empty()) {
            params = parse_noise_params(read_file(noise_path));
        }
        counts = run_shots(c, NoiseModel::all_to_all(c.num_qubits, params), shots, seed, {threads, max_qubits});
    }
    emit(out, format == "json" ? counts_json(counts) : counts.to_csv());
    return kOk;
}

int cmd_bench_gen(const std::string &family, const std::vector<std::string> &args, const std::string &prefix) {
    Benchmark b;
    try {
        b = make_benchmark(family, args);
    } catch (const CircuitError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (prefix.empty()) {
        std::cout << emit_qasm(b.circuit);
        return kOk;
    }
    write_file(prefix + ".qasm", emit_qasm(b.circuit));
    write_file(prefix + ".ideal.json", distribution_json(b.ideal));
    std::cout << "wrote " << prefix << ".qasm and " << prefix << ".ideal.json\n";
    return kOk;
}

int cmd_report(const std::string &report_path, const std::string &out_dir) {
    RenderedReport r = render_report(read_file(report_path));
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::filesystem::path d(out_dir);
        write_file((d / "records.csv").string(), r.records_csv);
        write_file((d / "summary.txt").string(), r.summary);
    }
    std::cout << r.summary;
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"canary-ordered ensemble fidelity boosting, in simulation"};
    app.require_subcommand(1);
    size_t threads = default_thread_count(1);
    app.add_option("--threads", threads, "Worker threads (default: CANORD_THREADS or 1)")->check(CLI::PositiveNumber);

    std::string config_path;
    std::string out_dir = "canord_out";
    auto *run = app.add_subcommand("run", "Run the full pipeline from a JSON config");
    run->add_option("config", config_path, "Config file")->required();
    run->add_option("-o,--out", out_dir, "Output directory")->capture_default_str();

    std::string in_path;
    std::string out_path;
    bool random_canary = false;
    uint64_t canary_seed = 1;
    auto *canary = app.add_subcommand("canary", "Write the nearest-Clifford canary of a circuit");
    canary->add_option("in", in_path, "Input QASM")->required();
    canary->add_option("out", out_path, "Output QASM ('-' for stdout)")->required();
    canary->add_flag("--random", random_canary, "Random Clifford angles instead of nearest");
    canary->add_option("--seed", canary_seed, "Seed for --random");

    std::string noise_path;
    uint64_t shots = 8192;
    uint64_t seed = 1;
    bool ideal = false;
    std::string format = "csv";
    uint32_t max_qubits = 16;
    auto *simulate = app.add_subcommand("simulate", "Sample a circuit under a uniform noise model");
    simulate->add_option("in", in_path, "Input QASM")->required();
    simulate->add_option("--noise", noise_path, "JSON noise rates {p1, p2, idle_z, ro01, ro10}");
    simulate->add_option("--shots", shots)->capture_default_str();
    simulate->add_option("--seed", seed)->capture_default_str();
    simulate->add_flag("--ideal", ideal, "Noiseless sampling (stabilizer simulator for Clifford circuits)");
    simulate->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    simulate->add_option("--max-qubits", max_qubits)->capture_default_str();
    simulate->add_option("-o,--out", out_path, "Output file (default stdout)");

    std::string family;
    std::vector<std::string> bench_args;
    std::string prefix;
    auto *bench = app.add_subcommand("bench-gen", "Generate a benchmark circuit and its ideal distribution");
    bench->add_option("family", family, "adder | qft | qaoa | kickback | fixture")->required();
    bench->add_option("args", bench_args, "Family arguments");
    bench->add_option("-o,--out", prefix, "Write PREFIX.qasm and PREFIX.ideal.json");

    std::string report_path;
    std::string report_out;
    auto *report = app.add_subcommand("report", "Re-render a report.json as CSV and summary");
    report->add_option("report", report_path, "report.json")->required();
    report->add_option("-o,--out", report_out, "Directory for records.csv and summary.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) {
            return cmd_run(config_path, out_dir, threads);
        }
        if (*canary) {
            return cmd_canary(in_path, out_path, random_canary, canary_seed);
        }
        if (*simulate) {
            return cmd_simulate(in_path, noise_path, shots, seed, ideal, format, out_path, threads, max_qubits);
        }
        if (*bench) {
            return cmd_bench_gen(family, bench_args, prefix);
        }
        if (*report) {
            return cmd_report(report_path, report_out);
        }
    } catch (const EmptyStringSetError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEmptyStrings;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const QasmParseError &e) {
        std::cerr << "qasm error: " << e.what() << "\n";
        return kConfigError;
    } catch (const CircuitError &e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kSimulationError;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
