#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcsim/circuit_io.hpp"
#include "qcsim/sparsity.hpp"

using namespace qcsim;

namespace {

using ordered_json = nlohmann::ordered_json;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

StateVector random_unit_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    StateVector s(n);
    double norm2 = 0.0;
    for (cplx& a : s.amps) {
        a = {dist(rng), dist(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& a : s.amps) a *= inv;
    return s;
}

SignMethod parse_sign_method(const std::string& name) {
    if (name == "nonopt") return SignMethod::nonopt;
    if (name == "quarter") return SignMethod::quarter;
    if (name == "block") return SignMethod::block;
    if (name == "logarithm" || name == "log") return SignMethod::logarithm;
    throw ParseError("unknown sign method: " + name);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw SimError("cannot open output file: " + out_path);
    f << text;
}

struct BenchRow {
    std::string suite;
    int n;
    std::string engine;
    double seconds = 0.0;
    std::uint64_t memory_bytes = 0;
    std::uint64_t sign_count = 0;
    std::uint64_t multiply_count = 0;
    std::string status = "ok";
    std::string note;
};

std::string render_bench(const std::vector<BenchRow>& rows, const std::string& format) {
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const BenchRow& r : rows)
            j.push_back({{"suite", r.suite},
                         {"n", r.n},
                         {"engine", r.engine},
                         {"seconds", r.seconds},
                         {"memory_bytes", r.memory_bytes},
                         {"sign_count", r.sign_count},
                         {"multiply_count", r.multiply_count},
                         {"status", r.status},
                         {"note", r.note}});
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "suite,n,engine,seconds,memory_bytes,sign_count,multiply_count,status,note\n";
    out.precision(9);
    for (const BenchRow& r : rows)
        out << r.suite << ',' << r.n << ',' << r.engine << ',' << r.seconds << ','
            << r.memory_bytes << ',' << r.sign_count << ',' << r.multiply_count << ','
            << r.status << ',' << r.note << '\n';
    return out.str();
}

std::uint64_t table2_count(SignMethod m, int n, std::uint64_t b) {
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    switch (m) {
        case SignMethod::nonopt: return (half * 2) * (half * 2);
        case SignMethod::quarter: return half * half;
        case SignMethod::block: return half * (half / b + b - 1);
        case SignMethod::logarithm: return half * std::uint64_t(n - 1);
    }
    return 0;
}

BenchRow bench_mtp(int n, Engine engine) {
    BenchRow row{"mtp", n, engine_name(engine)};
    const GateSpec x = gate_catalog_lookup("Pauli-X");
    CircuitStep step = CircuitStep::of_gates([&] {
        std::vector<Placement> p;
        for (int q = 0; q < n; ++q) p.push_back({x, q});
        return p;
    }());
    const double t0 = now_seconds();
    switch (engine) {
        case Engine::dense:
            row.memory_bytes = step_matrix_dense(step, n).data.size() * kDenseElementBytes;
            break;
        case Engine::das:
            row.memory_bytes = das_memory_bytes(step_matrix_das(step, n));
            break;
        default:
            row.memory_bytes = dax_memory_bytes(step_matrix_dax(step, n));
            break;
    }
    row.seconds = now_seconds() - t0;
    return row;
}

BenchRow bench_mvm(int n, Engine engine, std::uint64_t seed) {
    BenchRow row{"mvm", n, engine_name(engine)};
    const GateSpec x = gate_catalog_lookup("Pauli-X");
    CircuitStep step = CircuitStep::of_gates([&] {
        std::vector<Placement> p;
        for (int q = 0; q < n; ++q) p.push_back({x, q});
        return p;
    }());
    const StateVector s = random_unit_state(n, seed);
    if (engine == Engine::dense) {
        const DenseMatrix m = step_matrix_dense(step, n);
        row.memory_bytes = m.data.size() * kDenseElementBytes;
        const double t0 = now_seconds();
        dense_mvm(m, s);
        row.seconds = now_seconds() - t0;
        row.multiply_count = m.rows * m.cols;
    } else if (engine == Engine::das) {
        const DasMatrix m = step_matrix_das(step, n);
        row.memory_bytes = das_memory_bytes(m);
        const double t0 = now_seconds();
        das_mvm(m, s);
        row.seconds = now_seconds() - t0;
        row.multiply_count = m.entries.size();
    } else {
        const DaxMatrix m = step_matrix_dax(step, n);
        row.memory_bytes = dax_memory_bytes(m);
        const double t0 = now_seconds();
        dax_mvm(m, s);
        row.seconds = now_seconds() - t0;
        row.multiply_count = m.entries.size();
    }
    return row;
}

std::vector<BenchRow> bench_rh_signs(int n, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    const StateVector s = random_unit_state(n, seed);
    const RhMatrix rh = rh_build(n);
    for (SignMethod m : {SignMethod::nonopt, SignMethod::quarter, SignMethod::block,
                         SignMethod::logarithm}) {
        BenchRow row{"rh-signs", n, std::string("rh:") + sign_method_name(m)};
        const std::uint64_t b =
            m == SignMethod::block && n >= 2 ? optimal_block_size(n) : 1;
        RhMvmStats stats;
        const double t0 = now_seconds();
        rh_mvm(rh, s, m, &stats, m == SignMethod::block ? b : 0);
        row.seconds = now_seconds() - t0;
        row.memory_bytes = 16;
        row.sign_count = stats.sign_count;
        row.multiply_count = stats.madd_count;
        const std::uint64_t expected = table2_count(m, n, b);
        if (stats.sign_count != expected) {
            row.status = "counter-mismatch";
            row.note = "expected " + std::to_string(expected);
        }
        rows.push_back(row);
    }
    return rows;
}

BenchRow bench_grover(int n, Engine engine) {
    BenchRow row{"grover", n, engine_name(engine)};
    const std::uint64_t marked = (std::uint64_t(1) << n) / 3;
    const Circuit c = build_grover(n, marked);
    const double t0 = now_seconds();
    const SimReport rep = simulate(c, engine);
    row.seconds = now_seconds() - t0;
    for (const StepReport& s : rep.steps) row.memory_bytes = std::max(row.memory_bytes, s.matrix_bytes);
    row.sign_count = rep.total_sign_count;
    row.multiply_count = rep.total_madd_count;
    const std::uint64_t argmax =
        std::max_element(rep.probabilities.begin(), rep.probabilities.end()) -
        rep.probabilities.begin();
    row.note = "argmax=" + std::to_string(argmax);
    if (argmax != marked) row.status = "argmax-mismatch";
    return row;
}

BenchRow bench_qnn(int inputs, Engine engine, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 3.0);
    std::vector<double> angles(inputs);
    std::vector<int> weights(inputs);
    for (int i = 0; i < inputs; ++i) {
        angles[i] = ang(rng);
        weights[i] = (rng() & 1) ? 1 : -1;
    }
    const Circuit c = build_qnn_neuron(inputs, angles, weights);
    BenchRow row{"qnn", c.n, engine_name(engine)};
    const double t0 = now_seconds();
    const SimReport rep = simulate(c, engine);
    row.seconds = now_seconds() - t0;
    for (const StepReport& s : rep.steps) row.memory_bytes = std::max(row.memory_bytes, s.matrix_bytes);
    row.sign_count = rep.total_sign_count;
    row.multiply_count = rep.total_madd_count;
    row.note = "inputs=" + std::to_string(inputs);
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full-state quantum circuit simulator on compressed gate structures"};
    app.require_subcommand(1);

    std::string engine_name_opt = "dax";
    std::string sign_method_opt = "logarithm";
    std::uint64_t block_size_opt = 0;
    std::string format = "human";
    std::uint64_t seed = 0;
    int samples = 0;
    std::uint64_t dense_cap_opt = 0;
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--engine", engine_name_opt, "dense | dax | das | rh-dax");
        cmd->add_option("--sign-method", sign_method_opt,
                        "nonopt | quarter | block | logarithm (rh steps)");
        cmd->add_option("--block-size", block_size_opt, "block sign method only");
        cmd->add_option("--format", format, "human | json | csv");
        cmd->add_option("--seed", seed, "sampling / data seed");
        cmd->add_option("--dense-cap", dense_cap_opt, "dense element cap override");
        cmd->add_option("--out", out_path, "write output to file");
    };

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a circuit and report the final state");
    std::string circuit_path;
    int grover_n = 0, grover_iters = 0;
    std::uint64_t grover_marked = 0;
    bool grover_marked_set = false;
    int qnn_inputs = 0;
    std::string qnn_angles, qnn_weights;
    sim->add_option("circuit", circuit_path, "circuit JSON file");
    sim->add_option("--grover-n", grover_n, "build a Grover circuit with n qubits");
    sim->add_option("--grover-marked", grover_marked, "marked index")
        ->each([&](const std::string&) { grover_marked_set = true; });
    sim->add_option("--grover-iterations", grover_iters, "0 = auto");
    sim->add_option("--qnn-inputs", qnn_inputs, "build a neuron circuit with this many inputs");
    sim->add_option("--qnn-angles", qnn_angles, "comma list of encoding angles");
    sim->add_option("--qnn-weights", qnn_weights, "comma list of +1/-1 weights");
    sim->add_option("--samples", samples, "deterministic measurement samples");
    add_common(sim);

    // bench
    auto* bench = app.add_subcommand("bench", "micro-benchmarks with asserted counters");
    std::string suite = "mtp";
    std::string sizes_opt = "4,8,12";
    std::string engines_opt = "dax";
    bench->add_option("suite", suite, "mtp | mvm | rh-signs | grover | qnn");
    bench->add_option("--sizes", sizes_opt, "comma list of qubit counts (qnn: input counts)");
    bench->add_option("--engines", engines_opt, "comma list of engines");
    add_common(bench);

    // dump
    auto* dump = app.add_subcommand("dump", "write a compressed structure dump");
    std::string expr, structure = "dax";
    dump->add_option("expression", expr, "gate names joined by 'x', e.g. \"Y x X\"")->required();
    dump->add_option("--structure", structure, "dax | das");
    add_common(dump);

    // load
    auto* load = app.add_subcommand("load", "read a structure dump and summarize it");
    std::string dump_path;
    load->add_option("file", dump_path, "dump file")->required();
    add_common(load);

    // gates
    auto* gates_cmd = app.add_subcommand("gates", "list the gate catalog with zero ratios");
    add_common(gates_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dense_cap_opt != 0) set_dense_cap(dense_cap_opt);
        if (block_size_opt != 0 && sign_method_opt != "block")
            throw ParseError("--block-size is only valid with --sign-method block");

        if (sim->parsed()) {
            Circuit c;
            if (!circuit_path.empty()) {
                c = load_circuit_file(circuit_path);
            } else if (grover_n > 0) {
                if (!grover_marked_set) throw ParseError("--grover-marked is required");
                c = build_grover(grover_n, grover_marked, grover_iters);
            } else if (qnn_inputs > 0) {
                std::vector<double> angles(qnn_inputs, 0.0);
                std::vector<int> weights(qnn_inputs, 1);
                if (!qnn_angles.empty()) angles = parse_double_list(qnn_angles);
                if (!qnn_weights.empty()) weights = parse_int_list(qnn_weights);
                c = build_qnn_neuron(qnn_inputs, angles, weights);
            } else {
                throw ParseError("give a circuit file, --grover-n or --qnn-inputs");
            }
            SimOptions opts;
            opts.sign_method = parse_sign_method(sign_method_opt);
            opts.block_size = block_size_opt;
            const SimReport rep = simulate(c, engine_from_name(engine_name_opt), opts);
            ReportOptions ropts{format, samples, seed, engine_name_opt};
            emit(render_report(rep, c.n, ropts), out_path);
        } else if (bench->parsed()) {
            const std::vector<int> sizes = parse_int_list(sizes_opt);
            std::vector<Engine> engines;
            {
                std::stringstream in(engines_opt);
                std::string tok;
                while (std::getline(in, tok, ',')) engines.push_back(engine_from_name(tok));
            }
            std::vector<BenchRow> rows;
            for (int n : sizes) {
                if (suite == "rh-signs") {
                    auto r = bench_rh_signs(n, seed);
                    rows.insert(rows.end(), r.begin(), r.end());
                    continue;
                }
                for (Engine e : engines) {
                    try {
                        if (suite == "mtp")
                            rows.push_back(bench_mtp(n, e));
                        else if (suite == "mvm")
                            rows.push_back(bench_mvm(n, e, seed));
                        else if (suite == "grover")
                            rows.push_back(bench_grover(n, e));
                        else if (suite == "qnn")
                            rows.push_back(bench_qnn(n, e, seed));
                        else
                            throw ParseError("unknown bench suite: " + suite);
                    } catch (const CapacityError& err) {
                        BenchRow row{suite, n, engine_name(e)};
                        row.status = "capacity-error";
                        row.note = err.what();
                        rows.push_back(row);
                    }
                }
            }
            emit(render_bench(rows, format == "human" ? "csv" : format), out_path);
        } else if (dump->parsed()) {
            const DenseMatrix m = parse_gate_expression(expr);
            std::ostringstream buf(std::ios::binary);
            if (structure == "dax")
                dax_dump(dax_encode(m), buf);
            else if (structure == "das")
                das_dump(das_encode(m), buf);
            else
                throw ParseError("structure must be dax or das");
            if (out_path.empty()) throw ParseError("dump requires --out");
            emit(buf.str(), out_path);
        } else if (load->parsed()) {
            std::ifstream in(dump_path, std::ios::binary);
            if (!in) throw ParseError("cannot open dump file: " + dump_path);
            char magic[4] = {};
            in.read(magic, 4);
            in.seekg(0);
            std::ostringstream summary;
            std::ostringstream redump(std::ios::binary);
            if (std::string(magic, 4) == "DAX1") {
                const DaxMatrix m = dax_load(in);
                summary << "dax " << m.rows << "x" << m.cols << " entries=" << m.entries.size()
                        << " bytes=" << dax_memory_bytes(m) << "\n";
                dax_dump(m, redump);
            } else if (std::string(magic, 4) == "DAS1") {
                const DasMatrix m = das_load(in);
                summary << "das " << m.rows << "x" << m.cols << " entries=" << m.entries.size()
                        << " bytes=" << das_memory_bytes(m) << "\n";
                das_dump(m, redump);
            } else {
                throw ParseError("unrecognized dump magic");
            }
            if (!out_path.empty())
                emit(redump.str(), out_path);  // byte-identical round trip
            std::cout << summary.str();
        } else if (gates_cmd->parsed()) {
            if (format == "json") {
                ordered_json j = ordered_json::array();
                for (const GateInfo& g : gate_catalog())
                    j.push_back({{"name", g.name},
                                 {"arity", g.arity},
                                 {"params", g.param_count},
                                 {"shape", (1 << g.arity)},
                                 {"zero_ratio", g.zero_ratio}});
                emit(j.dump(2) + "\n", out_path);
            } else {
                std::ostringstream out;
                out << "name,arity,params,shape,zero_ratio\n";
                for (const GateInfo& g : gate_catalog())
                    out << g.name << ',' << g.arity << ',' << g.param_count << ','
                        << (1 << g.arity) << 'x' << (1 << g.arity) << ',' << g.zero_ratio
                        << '\n';
                emit(out.str(), out_path);
            }
        }
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
