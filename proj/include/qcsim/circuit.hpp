#pragma once

#include <string>
#include <vector>

#include "qcsim/gates.hpp"

namespace qcsim {

/// A gate applied at contiguous, ascending qubit positions starting at
/// `first_qubit`. Qubit 0 is the most significant bit of the basis index.
struct Placement {
    GateSpec gate;
    int first_qubit = 0;
};

/// Diagonal sign step: the diagonal holds +1 everywhere except -1 at the
/// listed indices; `flip_rest` inverts that selection. Grover's oracle is
/// {marked} and Z0 is {0} with flip_rest set.
struct DiagSign {
    std::vector<std::uint64_t> flipped;
    bool flip_rest = false;

    bool negated(std::uint64_t index) const;
};

/// One circuit time step: either a set of disjoint gate placements
/// (implicit identities elsewhere) or a whole-width diagonal sign flip.
struct CircuitStep {
    enum class Kind { gates, diag };
    Kind kind = Kind::gates;
    std::vector<Placement> placements;
    DiagSign diag;
    int stage = 0;  // builder annotation, surfaces in reports

    static CircuitStep of_gates(std::vector<Placement> p, int stage = 0);
    static CircuitStep of_diag(DiagSign d, int stage = 0);

    /// True when the placements are single-qubit Hadamards on all n qubits.
    bool is_hadamard_all(int n) const;
};

struct Circuit {
    int n = 0;
    std::vector<CircuitStep> steps;
    std::uint64_t initial = 0;

    /// Throws on overlapping placements, out-of-range qubits or indices.
    void validate() const;
};

/// Grover search: H on all qubits, then `iterations` repetitions of
/// [oracle; H-all; Z0; H-all]. iterations <= 0 selects
/// max(1, floor(pi/4 * sqrt(2^n))).
Circuit build_grover(int n, std::uint64_t marked, int iterations = 0);

std::uint64_t grover_auto_iterations(int n);

/// Binary-weight neuron circuit in four stages: RY data encoding on the
/// input qubits, sign flips plus Toffoli aggregation toward the encode
/// qubits, a controlled copy onto the output qubit, and readout.
/// Qubit layout: [inputs | encode (ceil log2 inputs) | output].
Circuit build_qnn_neuron(int input_qubits, const std::vector<double>& encode_angles,
                         const std::vector<int>& weights);

int qnn_total_qubits(int input_qubits);

}  // namespace qcsim
