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

#include "canord/pipeline.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "canord/canary.h"
#include "canord/qasm.h"
#include "canord/rng.h"
#include "json.hpp"

namespace canord {

using json = nlohmann::ordered_json;

namespace {

constexpr uint64_t kNoiseStream = 0x4E4F4953ULL;
constexpr uint64_t kLayoutStream = 0x4C41594FULL;
constexpr uint64_t kTargetStream = 0x54475430ULL;
constexpr uint64_t kCanaryStream = 0x43414E30ULL;

std::string resolve(const std::string &base_dir, const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) {
        return p.string();
    }
    return (std::filesystem::path(base_dir) / p).string();
}

void check_keys(const json &obj, std::string_view section, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
        throw ConfigError("[" + std::string(section) + "] must be an object");
    }
    for (const auto &item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw ConfigError("unknown key '" + item.key() + "' in [" + std::string(section) + "]");
        }
    }
}

template <typename T>
T get(const json &obj, const char *key, T fallback, std::string_view section) {
    if (!obj.contains(key)) {
        return fallback;
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &) {
        throw ConfigError("bad value for '" + std::string(key) + "' in [" + std::string(section) + "]");
    }
}

double get_real(const json &obj, const char *key, double fallback, std::string_view section) {
    if (obj.contains(key) && !obj.at(key).is_number()) {
        throw ConfigError("'" + std::string(key) + "' in [" + std::string(section) + "] must be a number");
    }
    return get<double>(obj, key, fallback, section);
}

uint64_t get_uint(const json &obj, const char *key, uint64_t fallback, std::string_view section) {
    if (obj.contains(key) && !obj.at(key).is_number_unsigned()) {
        throw ConfigError("'" + std::string(key) + "' in [" + std::string(section) +
                          "] must be a nonnegative integer");
    }
    return get<uint64_t>(obj, key, fallback, section);
}

NoiseParams noise_from_json(const json &obj) {
    check_keys(obj, "ensemble.noise", {"p1", "p2", "idle_z", "ro01", "ro10"});
    NoiseParams d;
    NoiseParams p{get_real(obj, "p1", d.p1, "ensemble.noise"), get_real(obj, "p2", d.p2, "ensemble.noise"),
                  get_real(obj, "idle_z", d.idle_z, "ensemble.noise"), get_real(obj, "ro01", d.ro01, "ensemble.noise"),
                  get_real(obj, "ro10", d.ro10, "ensemble.noise")};
    for (double gate : {p.p1, p.p2, p.idle_z}) {
        if (!(gate >= 0 && gate <= 0.5)) {
            throw ConfigError("gate error rates must lie in [0, 0.5]");
        }
    }
    for (double ro : {p.ro01, p.ro10}) {
        if (!(ro >= 0 && ro <= 1)) {
            throw ConfigError("readout error rates must lie in [0, 1]");
        }
    }
    return p;
}

json noise_to_json(const NoiseParams &p) {
    return json{{"p1", p.p1}, {"p2", p.p2}, {"idle_z", p.idle_z}, {"ro01", p.ro01}, {"ro10", p.ro10}};
}

uint64_t layouts_seed(const PipelineConfig &c) {
    return c.ensemble.layouts_seed.value_or(derive_seed(c.run.seed, kLayoutStream));
}

json parse_json(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

std::string label_for(size_t index, size_t count) {
    size_t width = std::to_string(count - 1).size();
    std::string digits = std::to_string(index);
    return "m" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

size_t PipelineConfig::member_count() const {
    if (ensemble.members != 0) {
        return ensemble.members;
    }
    switch (ensemble.mode) {
        case EnsembleMode::Inter:
            return 7;
        case EnsembleMode::Intra:
            return 50;
        case EnsembleMode::Monotone:
            return 20;
    }
    return 0;
}

std::string mode_name(EnsembleMode mode) {
    switch (mode) {
        case EnsembleMode::Inter:
            return "inter";
        case EnsembleMode::Intra:
            return "intra";
        case EnsembleMode::Monotone:
            return "monotone";
    }
    return "";
}

EnsembleMode parse_mode(std::string_view text) {
    if (text == "inter") {
        return EnsembleMode::Inter;
    }
    if (text == "intra") {
        return EnsembleMode::Intra;
    }
    if (text == "monotone") {
        return EnsembleMode::Monotone;
    }
    throw ConfigError("unknown ensemble mode '" + std::string(text) + "' (expected inter, intra or monotone)");
}

PipelineConfig parse_config(std::string_view json_text, const std::string &base_dir) {
    json root = parse_json(json_text, "config");
    check_keys(root, "root", {"circuit", "ensemble", "run", "correct"});
    PipelineConfig c;
    c.base_dir = base_dir;

    if (!root.contains("circuit")) {
        throw ConfigError("config needs a [circuit] section");
    }
    const json &circ = root.at("circuit");
    check_keys(circ, "circuit", {"qasm", "bench", "args"});
    c.circuit.qasm = get<std::string>(circ, "qasm", "", "circuit");
    c.circuit.bench = get<std::string>(circ, "bench", "", "circuit");
    if (c.circuit.qasm.empty() == c.circuit.bench.empty()) {
        throw ConfigError("[circuit] needs exactly one of 'qasm' or 'bench'");
    }
    if (circ.contains("args")) {
        if (!circ.at("args").is_array() || c.circuit.bench.empty()) {
            throw ConfigError("[circuit] 'args' must be a list and requires 'bench'");
        }
        for (const auto &a : circ.at("args")) {
            if (a.is_string()) {
                c.circuit.args.push_back(a.get<std::string>());
            } else if (a.is_number()) {
                c.circuit.args.push_back(a.dump());
            } else {
                throw ConfigError("[circuit] 'args' entries must be strings or numbers");
            }
        }
    }

    if (root.contains("ensemble")) {
        const json &e = root.at("ensemble");
        check_keys(e, "ensemble",
                   {"mode", "members", "graph", "graph_file", "noise", "scale", "jitter", "layouts_seed"});
        c.ensemble.mode = parse_mode(get<std::string>(e, "mode", "intra", "ensemble"));
        c.ensemble.members = get_uint(e, "members", 0, "ensemble");
        c.ensemble.graph = get<std::string>(e, "graph", c.ensemble.graph, "ensemble");
        c.ensemble.graph_file = get<std::string>(e, "graph_file", "", "ensemble");
        if (e.contains("noise")) {
            c.ensemble.noise = noise_from_json(e.at("noise"));
        }
        c.ensemble.scale = get_real(e, "scale", 1.0, "ensemble");
        c.ensemble.jitter = get_real(e, "jitter", 2.0, "ensemble");
        if (e.contains("layouts_seed")) {
            c.ensemble.layouts_seed = get_uint(e, "layouts_seed", 0, "ensemble");
        }
    }
    if (c.member_count() < 2) {
        throw ConfigError("an ensemble needs at least 2 members");
    }
    if (!(c.ensemble.scale >= 0) || !std::isfinite(c.ensemble.scale)) {
        throw ConfigError("[ensemble] scale must be a finite nonnegative number");
    }
    if (!(c.ensemble.jitter >= 1) || !std::isfinite(c.ensemble.jitter)) {
        throw ConfigError("[ensemble] jitter must be >= 1");
    }

    if (root.contains("run")) {
        const json &r = root.at("run");
        check_keys(r, "run", {"shots", "seed", "f_min", "weight", "max_qubits"});
        c.run.shots = get_uint(r, "shots", c.run.shots, "run");
        c.run.seed = get_uint(r, "seed", c.run.seed, "run");
        c.run.f_min = get_real(r, "f_min", c.run.f_min, "run");
        try {
            c.run.weight = WeightFunction::parse(get<std::string>(r, "weight", "linear", "run"));
        } catch (const std::invalid_argument &err) {
            throw ConfigError(err.what());
        }
        c.run.max_qubits = static_cast<uint32_t>(get_uint(r, "max_qubits", c.run.max_qubits, "run"));
    }
    if (c.run.shots == 0) {
        throw ConfigError("[run] shots must be positive");
    }
    if (!(c.run.f_min > 0 && c.run.f_min <= 1)) {
        throw ConfigError("[run] f_min must be in (0, 1]");
    }

    if (root.contains("correct")) {
        const json &k = root.at("correct");
        check_keys(k, "correct", {"sidecar", "ratio"});
        c.correct.sidecar = get<std::string>(k, "sidecar", "", "correct");
        c.correct.ratio = get_real(k, "ratio", 0.5, "correct");
        if (!(c.correct.ratio > 0 && c.correct.ratio <= 1)) {
            throw ConfigError("[correct] ratio must be in (0, 1]");
        }
    }
    return c;
}

PipelineConfig load_config(const std::string &path) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_config(read_file(path), dir.empty() ? "." : dir);
}

namespace {

json config_to_json(const PipelineConfig &c) {
    json circ = json::object();
    if (!c.circuit.qasm.empty()) {
        circ["qasm"] = c.circuit.qasm;
    } else {
        circ["bench"] = c.circuit.bench;
        circ["args"] = c.circuit.args;
    }
    json ens{{"mode", mode_name(c.ensemble.mode)},
             {"members", c.member_count()},
             {"graph", c.ensemble.graph_file.empty() ? c.ensemble.graph : ""},
             {"graph_file", c.ensemble.graph_file},
             {"noise", noise_to_json(c.ensemble.noise)},
             {"scale", c.ensemble.scale},
             {"jitter", c.ensemble.jitter},
             {"layouts_seed", layouts_seed(c)}};
    json run{{"shots", c.run.shots},
             {"seed", c.run.seed},
             {"f_min", c.run.f_min},
             {"weight", c.run.weight.str()},
             {"max_qubits", c.run.max_qubits}};
    json correct{{"sidecar", c.correct.sidecar}, {"ratio", c.correct.ratio}};
    return json{{"circuit", circ}, {"ensemble", ens}, {"run", run}, {"correct", correct}};
}

}  // namespace

std::string resolved_config_json(const PipelineConfig &config) {
    return config_to_json(config).dump(2) + "\n";
}

LoadedCircuit load_circuit(const PipelineConfig &config) {
    LoadedCircuit out;
    if (!config.circuit.qasm.empty()) {
        out.source = parse_qasm(read_file(resolve(config.base_dir, config.circuit.qasm)));
        if (out.source.name.empty()) {
            out.source.name = std::filesystem::path(config.circuit.qasm).stem().string();
        }
    } else {
        Benchmark b;
        try {
            b = make_benchmark(config.circuit.bench, config.circuit.args);
        } catch (const CircuitError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        out.source = std::move(b.circuit);
        out.ideal = std::move(b.ideal);
    }
    if (!config.correct.sidecar.empty()) {
        out.ideal = parse_distribution_json(read_file(resolve(config.base_dir, config.correct.sidecar)));
        for (const auto &[s, p] : *out.ideal) {
            if (s.width() != out.source.num_clbits) {
                throw ConfigError("sidecar string width does not match the circuit's clbits");
            }
        }
    }
    out.logical = decompose_to_basis(out.source);
    out.logical.name = out.source.name;
    return out;
}

std::vector<Member> build_members(const PipelineConfig &config, const Circuit &logical) {
    CouplingGraph graph;
    try {
        graph = config.ensemble.graph_file.empty()
                    ? CouplingGraph::preset(config.ensemble.graph)
                    : CouplingGraph::parse(read_file(resolve(config.base_dir, config.ensemble.graph_file)));
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (graph.num_physical_qubits() < logical.num_qubits) {
        throw ConfigError("graph has " + std::to_string(graph.num_physical_qubits()) + " qubits, circuit needs " +
                          std::to_string(logical.num_qubits));
    }
    const size_t count = config.member_count();
    const uint64_t noise_seed = derive_seed(config.run.seed, kNoiseStream);
    NoiseModel base = NoiseModel::for_graph(graph, config.ensemble.noise).scaled(config.ensemble.scale);

    std::vector<Member> members(count);
    if (config.ensemble.mode == EnsembleMode::Monotone) {
        Layout layout = Layout::identity(logical.num_qubits, graph.num_physical_qubits());
        for (size_t k = 0; k < count; k++) {
            Member &m = members[k];
            m.label = label_for(k, count);
            m.layout = layout;
            m.noise = base.scaled(static_cast<double>(k + 1) / static_cast<double>(count));
            m.target = route(logical, graph, layout);
        }
    } else {
        std::vector<Layout> layouts = random_layouts(logical, graph, count, layouts_seed(config));
        std::vector<NoiseModel> models;
        if (config.ensemble.mode == EnsembleMode::Inter) {
            models = make_diverse_ensemble(base, count, config.ensemble.jitter, noise_seed);
        } else {
            models.assign(count, jitter_model(base, config.ensemble.jitter, noise_seed));
        }
        for (size_t k = 0; k < count; k++) {
            Member &m = members[k];
            m.label = label_for(k, count);
            m.layout = layouts[k];
            m.noise = std::move(models[k]);
            std::vector<uint32_t> nodes(layouts[k].logical_to_physical.begin(),
                                        layouts[k].logical_to_physical.begin() + logical.num_qubits);
            m.target = route(logical, graph.induced(nodes), layouts[k]);
        }
    }
    for (Member &m : members) {
        m.target.name = logical.name;
        m.canary = make_canary(m.target);
    }
    return members;
}

EnsembleRun execute(const PipelineConfig &config, const LoadedCircuit &circuit, const std::vector<Member> &members,
                    size_t threads) {
    EnsembleRun run;
    run.target_circuit = circuit.logical;
    run.canary_circuit = make_canary(circuit.logical);
    RunOptions options{threads, config.run.max_qubits};
    for (size_t k = 0; k < members.size(); k++) {
        const Member &m = members[k];
        run.members.push_back(m.label);
        run.target_counts.push_back(
            run_shots(m.target, m.noise, config.run.shots, derive_seed(config.run.seed, kTargetStream, k), options));
        run.canary_counts.push_back(
            run_shots(m.canary, m.noise, config.run.shots, derive_seed(config.run.seed, kCanaryStream, k), options));
    }
    return run;
}

PipelineResult run_pipeline(const PipelineConfig &config, size_t threads) {
    PipelineResult r;
    r.config = config;
    r.circuit = load_circuit(config);
    r.members = build_members(config, r.circuit.logical);
    r.run = execute(config, r.circuit, r.members, threads);
    AnalysisOptions options{config.run.f_min, config.run.weight, threads};
    r.report = analyze(r.run, options, r.circuit.ideal ? &*r.circuit.ideal : nullptr, config.correct.ratio);
    return r;
}

namespace {

json optional_number(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

json rank_number(size_t v) {
    return v == kRankAbsent ? json(nullptr) : json(v);
}

}  // namespace

std::string report_json(const PipelineResult &result) {
    const Report &rep = result.report;
    const Circuit &logical = result.circuit.logical;
    json out;
    out["tool"] = "canord";
    out["config"] = config_to_json(result.config);
    out["circuit"] = json{{"name", logical.name},
                          {"num_qubits", logical.num_qubits},
                          {"num_clbits", logical.num_clbits},
                          {"gates", logical.gates.size()},
                          {"cx", logical.count(GateKind::CX)},
                          {"cx_depth", cx_depth(logical)}};
    json members = json::array();
    for (size_t k = 0; k < result.members.size(); k++) {
        const Member &m = result.members[k];
        json entry{{"label", m.label},
                   {"layout", std::vector<uint32_t>(m.layout.logical_to_physical.begin(),
                                                    m.layout.logical_to_physical.begin() + logical.num_qubits)},
                   {"mean_p2", m.noise.mean_p2()},
                   {"routed_cx", m.target.count(GateKind::CX)},
                   {"canary_fidelity", rep.canary_fidelities[k]},
                   {"canary_rank", rep.canary_ranks[k]}};
        if (rep.metrics) {
            entry["fidelity"] = rep.metrics->member_fidelities[k];
        }
        members.push_back(std::move(entry));
    }
    out["members"] = std::move(members);
    out["strings_analyzed"] = rep.strings_analyzed;
    out["string_bound"] = static_cast<uint64_t>(std::ceil(1 / result.config.run.f_min - 1e-9));
    out["fallback"] = rep.fallback;
    json correct = json::array();
    for (const auto &s : rep.correct) {
        correct.push_back(s.str());
    }
    out["correct"] = std::move(correct);
    if (rep.rank) {
        out["rank"] = json{{"best", rank_number(rep.rank->best)},
                           {"worst", rank_number(rep.rank->worst)},
                           {"found", rep.rank->found}};
    } else {
        out["rank"] = nullptr;
    }
    if (rep.metrics) {
        const Metrics &m = *rep.metrics;
        out["metrics"] = json{{"fidelity_q", m.fidelity_q},
                              {"fidelity_pooled", m.fidelity_pooled},
                              {"mean_member_fidelity", m.mean_member_fidelity},
                              {"best_member_fidelity", m.best_member_fidelity},
                              {"boost_mean", optional_number(m.boost_mean)},
                              {"boost_vs_best", optional_number(m.boost_vs_best)}};
    } else {
        out["metrics"] = nullptr;
    }
    json records = json::array();
    for (const auto &r : rep.records) {
        records.push_back(
            json{{"string", r.string.str()}, {"rho", r.rho}, {"p_base", r.p_base}, {"weight", r.weight}, {"q", r.q}});
    }
    out["records"] = std::move(records);
    return out.dump(2) + "\n";
}

namespace {

std::string fmt(double v, const char *spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_json_number(const json &v, const char *spec = "%.6g") {
    return v.is_null() ? "n/a" : fmt(v.get<double>(), spec);
}

}  // namespace

RenderedReport render_report(std::string_view text) {
    json rep = parse_json(text, "report");
    RenderedReport out;
    try {
        std::ostringstream csv;
        csv << "string,rho,p_base,q\n";
        for (const auto &r : rep.at("records")) {
            csv << r.at("string").get<std::string>() << ',' << fmt(r.at("rho").get<double>(), "%.12g") << ','
                << fmt(r.at("p_base").get<double>(), "%.12g") << ',' << fmt(r.at("q").get<double>(), "%.12g") << '\n';
        }
        out.records_csv = csv.str();

        std::ostringstream s;
        const json &cfg = rep.at("config");
        const json &circ = rep.at("circuit");
        s << "canord report\n";
        s << "circuit        " << circ.at("name").get<std::string>() << " (" << circ.at("num_qubits").get<uint64_t>()
          << " qubits, " << circ.at("gates").get<uint64_t>() << " basis gates, cx depth "
          << circ.at("cx_depth").get<uint64_t>() << ")\n";
        s << "ensemble       " << cfg.at("ensemble").at("mode").get<std::string>() << ", "
          << cfg.at("ensemble").at("members").get<uint64_t>() << " members, " << cfg.at("run").at("shots").get<uint64_t>()
          << " shots each, seed " << cfg.at("run").at("seed").get<uint64_t>() << "\n";
        std::vector<double> fids;
        for (const auto &m : rep.at("members")) {
            fids.push_back(m.at("canary_fidelity").get<double>());
        }
        double mean = 0;
        for (double f : fids) {
            mean += f / static_cast<double>(fids.size());
        }
        s << "canary fidelity min " << fmt(*std::min_element(fids.begin(), fids.end())) << ", mean " << fmt(mean)
          << ", max " << fmt(*std::max_element(fids.begin(), fids.end())) << "\n";
        s << "strings        " << rep.at("strings_analyzed").get<uint64_t>() << " analyzed (bound "
          << rep.at("string_bound").get<uint64_t>() << ")" << (rep.at("fallback").get<bool>() ? ", fallback to p_base" : "")
          << "\n";
        if (!rep.at("rank").is_null()) {
            const json &r = rep.at("rank");
            s << "rank           " << (r.at("best").is_null() ? "absent" : std::to_string(r.at("best").get<uint64_t>()));
            if (r.at("found").get<uint64_t>() > 1) {
                s << " (worst " << r.at("worst").get<uint64_t>() << ")";
            }
            s << " of " << rep.at("strings_analyzed").get<uint64_t>() << "\n";
        }
        if (!rep.at("metrics").is_null()) {
            const json &m = rep.at("metrics");
            s << "fidelity       q " << fmt_json_number(m.at("fidelity_q")) << ", pooled "
              << fmt_json_number(m.at("fidelity_pooled")) << ", member mean "
              << fmt_json_number(m.at("mean_member_fidelity")) << ", member best "
              << fmt_json_number(m.at("best_member_fidelity")) << "\n";
            s << "boost          mean " << fmt_json_number(m.at("boost_mean"), "%.3f") << "x, vs best "
              << fmt_json_number(m.at("boost_vs_best"), "%.3f") << "x\n";
        }
        s << "\ntop strings by rho\n";
        s << "  #  string                 rho      p_base   q\n";
        size_t shown = 0;
        for (const auto &r : rep.at("records")) {
            if (shown++ == 10) {
                break;
            }
            char line[256];
            std::snprintf(line, sizeof line, "%3zu  %-20s %8.4f %8.5f %8.5f\n", shown,
                          r.at("string").get<std::string>().c_str(), r.at("rho").get<double>(),
                          r.at("p_base").get<double>(), r.at("q").get<double>());
            s << line;
        }
        out.summary = s.str();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
    return out;
}

void write_report_files(const PipelineResult &result, const std::string &dir) {
    std::filesystem::create_directories(dir);
    std::string text = report_json(result);
    RenderedReport rendered = render_report(text);
    std::filesystem::path d(dir);
    write_file((d / "report.json").string(), text);
    write_file((d / "records.csv").string(), rendered.records_csv);
    write_file((d / "summary.txt").string(), rendered.summary);
}

std::string distribution_json(const Distribution &d) {
    json out = json::array();
    for (const auto &[s, p] : d) {
        out.push_back(json::array({s.str(), p}));
    }
    return out.dump() + "\n";
}

Distribution parse_distribution_json(std::string_view text) {
    json j = parse_json(text, "distribution");
    if (!j.is_array()) {
        throw ConfigError("distribution must be a list of [bitstring, probability] pairs");
    }
    Distribution out;
    size_t width = 0;
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number()) {
            throw ConfigError("distribution entries must be [bitstring, probability]");
        }
        BitString s;
        try {
            s = BitString(e[0].get<std::string>());
        } catch (const std::invalid_argument &err) {
            throw ConfigError(err.what());
        }
        double p = e[1].get<double>();
        if (!(p >= 0 && p <= 1)) {
            throw ConfigError("probabilities must lie in [0, 1]");
        }
        if (!out.empty() && s.width() != width) {
            throw ConfigError("distribution strings differ in width");
        }
        width = s.width();
        out[s] += p;
    }
    return out;
}

std::string counts_json(const Counts &counts) {
    json hist = json::object();
    for (const auto &[s, n] : counts.histogram) {
        hist[s.str()] = n;
    }
    json out{{"num_bits", counts.num_bits}, {"total_shots", counts.total_shots}, {"counts", hist}};
    return out.dump(2) + "\n";
}

NoiseParams parse_noise_params(std::string_view json_text) {
    return noise_from_json(parse_json(json_text, "noise config"));
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace canord
