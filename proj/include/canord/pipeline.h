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

#ifndef CANORD_PIPELINE_H
#define CANORD_PIPELINE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canord/bench.h"
#include "canord/correlation.h"
#include "canord/noisysim.h"
#include "canord/transpile.h"

namespace canord {

/// Malformed or inconsistent configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CircuitSource {
    /// Either a QASM file ...
    std::string qasm;
    /// ... or a generator family with its arguments (see make_benchmark).
    std::string bench;
    std::vector<std::string> args;
};

enum class EnsembleMode {
    /// Independently jittered machines, one random layout each.
    Inter,
    /// One jittered machine, a different random layout per member.
    Intra,
    /// Identity layout, member k runs the base model scaled by (k+1)/count.
    Monotone,
};

struct EnsembleConfig {
    EnsembleMode mode = EnsembleMode::Intra;
    /// 0 selects the mode default (intra 50, inter 7, monotone 20).
    size_t members = 0;
    std::string graph = "heavy_hex27";
    std::string graph_file;
    NoiseParams noise;
    /// Multiplies every base rate before jitter.
    double scale = 1.0;
    double jitter = 2.0;
    /// Defaults to a value derived from the run seed.
    std::optional<uint64_t> layouts_seed;
};

struct RunSettings {
    uint64_t shots = 8192;
    uint64_t seed = 1;
    double f_min = 0.001;
    WeightFunction weight;
    uint32_t max_qubits = 16;
};

struct CorrectSpec {
    /// JSON sidecar: [[bitstring, probability], ...].
    std::string sidecar;
    double ratio = 0.5;
};

struct PipelineConfig {
    CircuitSource circuit;
    EnsembleConfig ensemble;
    RunSettings run;
    CorrectSpec correct;
    /// Relative paths are resolved against this directory.
    std::string base_dir = ".";

    size_t member_count() const;
};

std::string mode_name(EnsembleMode mode);
EnsembleMode parse_mode(std::string_view text);

/// Parses the JSON config format; unknown keys are errors.
PipelineConfig parse_config(std::string_view json_text, const std::string &base_dir = ".");
PipelineConfig load_config(const std::string &path);
/// Config with every default expanded, as embedded in report.json.
std::string resolved_config_json(const PipelineConfig &config);

/// One execution context of the ensemble.
struct Member {
    std::string label;
    Layout layout;
    NoiseModel noise;
    Circuit target;  // decomposed and routed
    Circuit canary;
};

struct LoadedCircuit {
    Circuit source;
    Circuit logical;  // decomposed to basis gates
    std::optional<Distribution> ideal;
};

LoadedCircuit load_circuit(const PipelineConfig &config);
std::vector<Member> build_members(const PipelineConfig &config, const Circuit &logical);

struct PipelineResult {
    PipelineConfig config;
    LoadedCircuit circuit;
    std::vector<Member> members;
    EnsembleRun run;
    Report report;
};

/// Loads the circuit, builds the ensemble, simulates every member and
/// analyzes the result. `threads` only affects speed.
PipelineResult run_pipeline(const PipelineConfig &config, size_t threads = 1);

/// Simulates members [0, count) of a prepared ensemble.
EnsembleRun execute(const PipelineConfig &config, const LoadedCircuit &circuit, const std::vector<Member> &members,
                    size_t threads = 1);

/// Full report; byte-identical for identical config.
std::string report_json(const PipelineResult &result);

struct RenderedReport {
    std::string records_csv;
    std::string summary;
};

/// CSV records table and plain-text summary rendered from report.json text.
RenderedReport render_report(std::string_view report_json_text);

/// Writes report.json, records.csv and summary.txt into `dir`.
void write_report_files(const PipelineResult &result, const std::string &dir);

std::string distribution_json(const Distribution &d);
Distribution parse_distribution_json(std::string_view text);
std::string counts_json(const Counts &counts);

NoiseParams parse_noise_params(std::string_view json_text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace canord

#endif
