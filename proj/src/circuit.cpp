#include "qcsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcsim {

bool DiagSign::negated(std::uint64_t index) const {
    const bool listed = std::binary_search(flipped.begin(), flipped.end(), index);
    return listed != flip_rest;
}

CircuitStep CircuitStep::of_gates(std::vector<Placement> p, int stage) {
    CircuitStep s;
    s.kind = Kind::gates;
    s.placements = std::move(p);
    s.stage = stage;
    return s;
}

CircuitStep CircuitStep::of_diag(DiagSign d, int stage) {
    CircuitStep s;
    s.kind = Kind::diag;
    std::sort(d.flipped.begin(), d.flipped.end());
    s.diag = std::move(d);
    s.stage = stage;
    return s;
}

bool CircuitStep::is_hadamard_all(int n) const {
    if (kind != Kind::gates || int(placements.size()) != n) return false;
    std::uint64_t covered = 0;
    for (const Placement& p : placements) {
        if (p.gate.name != "Hadamard" || p.gate.arity != 1) return false;
        covered |= std::uint64_t(1) << p.first_qubit;
    }
    return covered == (std::uint64_t(1) << n) - 1;
}

void Circuit::validate() const {
    if (n < 1) throw DimensionError("circuit needs n >= 1 qubits");
    const std::uint64_t dim = std::uint64_t(1) << n;
    if (initial >= dim) throw DimensionError("initial basis index out of range");
    for (const CircuitStep& step : steps) {
        if (step.kind == CircuitStep::Kind::diag) {
            for (std::uint64_t i : step.diag.flipped)
                if (i >= dim) throw DimensionError("diagonal step index out of range");
            continue;
        }
        std::uint64_t covered = 0;
        for (const Placement& p : step.placements) {
            if (p.first_qubit < 0 || p.first_qubit + p.gate.arity > n)
                throw DimensionError("gate placement out of range");
            for (int q = p.first_qubit; q < p.first_qubit + p.gate.arity; ++q) {
                const std::uint64_t bit = std::uint64_t(1) << q;
                if (covered & bit) throw DimensionError("overlapping gate placements in a step");
                covered |= bit;
            }
        }
    }
}

namespace {

CircuitStep hadamard_all(int n, int stage = 0) {
    std::vector<Placement> p;
    const GateSpec h = gate_catalog_lookup("Hadamard");
    for (int q = 0; q < n; ++q) p.push_back({h, q});
    return CircuitStep::of_gates(std::move(p), stage);
}

}  // namespace

std::uint64_t grover_auto_iterations(int n) {
    const double k = std::numbers::pi / 4.0 * std::sqrt(std::exp2(n));
    return std::max<std::uint64_t>(1, std::uint64_t(std::floor(k)));
}

Circuit build_grover(int n, std::uint64_t marked, int iterations) {
    if (n < 1) throw DimensionError("Grover needs n >= 1");
    if (marked >= (std::uint64_t(1) << n)) throw DimensionError("marked index out of range");
    const std::uint64_t iters =
        iterations > 0 ? std::uint64_t(iterations) : grover_auto_iterations(n);

    Circuit c;
    c.n = n;
    c.steps.push_back(hadamard_all(n));
    for (std::uint64_t i = 0; i < iters; ++i) {
        c.steps.push_back(CircuitStep::of_diag({{marked}, false}));  // oracle
        c.steps.push_back(hadamard_all(n));
        c.steps.push_back(CircuitStep::of_diag({{0}, true}));  // Z0
        c.steps.push_back(hadamard_all(n));
    }
    return c;
}

int qnn_total_qubits(int input_qubits) {
    if (input_qubits < 1) throw DimensionError("neuron needs at least one input qubit");
    int enc = 0;
    while ((1 << enc) < input_qubits) ++enc;
    return input_qubits + enc + 1;
}

Circuit build_qnn_neuron(int input_qubits, const std::vector<double>& encode_angles,
                         const std::vector<int>& weights) {
    if (int(encode_angles.size()) != input_qubits || int(weights.size()) != input_qubits)
        throw SimError("angle and weight lists must match the input qubit count");
    for (int w : weights)
        if (w != 1 && w != -1) throw SimError("weights must be +1 or -1");

    const int n = qnn_total_qubits(input_qubits);
    const int enc = n - input_qubits - 1;

    Circuit c;
    c.n = n;

    // Stage 1: dense RY data encoding on the input qubits.
    {
        std::vector<Placement> p;
        for (int q = 0; q < input_qubits; ++q)
            p.push_back({gate_catalog_lookup("RY", {encode_angles[q]}), q});
        c.steps.push_back(CircuitStep::of_gates(std::move(p), 1));
    }

    // Stage 2: binary weights as Z flips, then Toffoli aggregation sliding
    // from the input boundary into the encode qubits.
    {
        std::vector<Placement> p;
        const GateSpec z = gate_catalog_lookup("Pauli-Z");
        for (int q = 0; q < input_qubits; ++q)
            if (weights[q] == -1) p.push_back({z, q});
        if (!p.empty()) c.steps.push_back(CircuitStep::of_gates(std::move(p), 2));
    }
    const GateSpec ccx = gate_catalog_lookup("CCX");
    for (int e = 0; e < enc; ++e) {
        const int first = input_qubits - 2 + e;
        if (first >= 0)
            c.steps.push_back(CircuitStep::of_gates({{ccx, first}}, 2));
    }

    // Stage 3: controlled copy of the aggregate onto the output qubit.
    {
        const GateSpec cx = gate_catalog_lookup("Controlled-X");
        c.steps.push_back(CircuitStep::of_gates({{cx, n - 2}}, 3));
    }
    // Stage 4 is readout; it adds no gate step.
    return c;
}

}  // namespace qcsim
