#include "qcsim/circuit_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace qcsim {

namespace {

using ordered_json = nlohmann::ordered_json;

Placement parse_placement(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("gate") || !j.contains("targets"))
        throw ParseError("placement needs \"gate\" and \"targets\"");
    const std::string name = j.at("gate").get<std::string>();
    std::vector<double> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
    const GateSpec gate = gate_catalog_lookup(name, params);
    const auto targets = j.at("targets").get<std::vector<int>>();
    if (int(targets.size()) != gate.arity)
        throw ParseError("gate " + gate.name + " targets " + std::to_string(gate.arity) +
                         " qubit(s)");
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (targets[i] != targets[i - 1] + 1)
            throw ParseError("gate targets must be ascending and contiguous");
    return {gate, targets[0]};
}

CircuitStep parse_step(const nlohmann::json& j) {
    if (j.is_array()) {
        std::vector<Placement> placements;
        for (const auto& p : j) placements.push_back(parse_placement(p));
        return CircuitStep::of_gates(std::move(placements));
    }
    if (j.is_object()) {
        if (j.contains("oracle"))
            return CircuitStep::of_diag({{j.at("oracle").get<std::uint64_t>()}, false});
        if (j.contains("z0")) return CircuitStep::of_diag({{0}, true});
        if (j.contains("diag")) {
            const auto& d = j.at("diag");
            DiagSign ds;
            ds.flipped = d.at("flipped").get<std::vector<std::uint64_t>>();
            ds.flip_rest = d.value("flip_rest", false);
            return CircuitStep::of_diag(std::move(ds));
        }
    }
    throw ParseError("step must be a placement list or a diagonal object");
}

}  // namespace

Circuit parse_circuit_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("circuit JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("qubits") || !j.contains("steps"))
            throw ParseError("circuit needs \"qubits\" and \"steps\"");
        Circuit c;
        c.n = j.at("qubits").get<int>();
        c.initial = j.value("initial", std::uint64_t(0));
        for (const auto& s : j.at("steps")) c.steps.push_back(parse_step(s));
        c.validate();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("circuit JSON: ") + e.what());
    }
}

Circuit load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open circuit file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit_json(buf.str());
}

DenseMatrix parse_gate_expression(const std::string& expr) {
    // Shape: name (x name)*. The operator token is a lowercase "x" or "*",
    // so Pauli-X can still be written as "X".
    std::vector<std::string> names;
    std::string tok;
    std::istringstream in(expr);
    while (in >> tok) names.push_back(tok);
    std::vector<std::string> gates;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i % 2 == 1) {
            if (names[i] != "x" && names[i] != "*")
                throw ParseError("expected tensor operator 'x' in expression");
        } else {
            gates.push_back(names[i]);
        }
    }
    if (gates.empty() || names.size() % 2 == 0)
        throw ParseError("expression must be gate names joined by 'x'");
    DenseMatrix acc = gate_catalog_lookup(gates[0], canonical_params(gates[0])).matrix;
    for (std::size_t i = 1; i < gates.size(); ++i)
        acc = dense_tensor(acc, gate_catalog_lookup(gates[i], canonical_params(gates[i])).matrix);
    return acc;
}

std::string render_report(const SimReport& report, int n, const ReportOptions& opts) {
    const std::vector<double>& probs = report.probabilities;
    const std::uint64_t argmax =
        std::max_element(probs.begin(), probs.end()) - probs.begin();

    std::vector<std::uint64_t> samples;
    if (opts.samples > 0) {
        std::mt19937_64 rng(opts.seed);
        std::vector<double> cdf(probs.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            cdf[i] = acc;
        }
        std::uniform_real_distribution<double> dist(0.0, acc);
        for (int i = 0; i < opts.samples; ++i) {
            const double u = dist(rng);
            samples.push_back(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        }
    }

    if (opts.format == "json") {
        ordered_json j;
        j["qubits"] = n;
        j["engine"] = opts.engine;
        j["argmax"] = argmax;
        j["max_probability"] = probs[argmax];
        j["norm"] = report.final.norm();
        if (probs.size() <= (1u << 16)) {
            j["probabilities"] = probs;
        } else {
            std::vector<std::uint64_t> idx(probs.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::partial_sort(idx.begin(), idx.begin() + 16, idx.end(),
                              [&](auto a, auto b) { return probs[a] > probs[b]; });
            ordered_json top = ordered_json::array();
            for (int i = 0; i < 16; ++i)
                top.push_back({{"index", idx[i]}, {"probability", probs[idx[i]]}});
            j["top_probabilities"] = top;
        }
        ordered_json steps = ordered_json::array();
        for (const StepReport& s : report.steps) {
            steps.push_back({{"structure", s.structure},
                             {"stage", s.stage},
                             {"matrix_bytes", s.matrix_bytes},
                             {"dense_bytes", s.dense_bytes},
                             {"entry_count", s.entry_count},
                             {"sign_count", s.sign_count},
                             {"madd_count", s.madd_count}});
        }
        j["steps"] = steps;
        j["total_sign_count"] = report.total_sign_count;
        j["total_madd_count"] = report.total_madd_count;
        if (opts.samples > 0) {
            j["seed"] = opts.seed;
            j["samples"] = samples;
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    if (opts.format == "csv") {
        out << "step,structure,stage,matrix_bytes,dense_bytes,entry_count,sign_count,madd_count\n";
        for (std::size_t i = 0; i < report.steps.size(); ++i) {
            const StepReport& s = report.steps[i];
            out << i << ',' << s.structure << ',' << s.stage << ',' << s.matrix_bytes << ','
                << s.dense_bytes << ',' << s.entry_count << ',' << s.sign_count << ','
                << s.madd_count << '\n';
        }
        out << "argmax," << argmax << "\nmax_probability," << probs[argmax] << '\n';
        return out.str();
    }

    out.precision(12);
    out << "qubits:          " << n << "\n"
        << "engine:          " << opts.engine << "\n"
        << "argmax:          " << argmax << "\n"
        << "max probability: " << probs[argmax] << "\n"
        << "norm:            " << report.final.norm() << "\n"
        << "steps:\n";
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const StepReport& s = report.steps[i];
        out << "  [" << i << "] " << s.structure << "  bytes=" << s.matrix_bytes
            << " (dense " << s.dense_bytes << ")";
        if (s.entry_count) out << " entries=" << s.entry_count;
        if (s.sign_count) out << " signs=" << s.sign_count;
        out << " madds=" << s.madd_count << "\n";
    }
    if (opts.samples > 0) {
        out << "samples (seed " << opts.seed << "):";
        for (std::uint64_t s : samples) out << ' ' << s;
        out << "\n";
    }
    return out.str();
}

}  // namespace qcsim
