#pragma once

#include <string>

#include "qcsim/engine.hpp"

namespace qcsim {

/// Parses the JSON circuit document:
///   { "qubits": <int>, "initial": <int, optional>,
///     "steps": [ <step>, ... ] }
/// where a step is either a list of placements
///   [ {"gate": <name>, "targets": [q, ...], "params": [..]?}, ... ]
/// or a diagonal sign flip
///   {"oracle": <index>}  |  {"z0": true}  |
///   {"diag": {"flipped": [i, ...], "flip_rest": <bool>?}}
/// Targets must be ascending and contiguous.
Circuit parse_circuit_json(const std::string& text);

Circuit load_circuit_file(const std::string& path);

/// Parses a tensor expression of catalog gate names joined by "x",
/// e.g. "Y x X" or "CCX x Pauli-X", into the dense product.
DenseMatrix parse_gate_expression(const std::string& expr);

struct ReportOptions {
    std::string format = "human";  // human | json | csv
    int samples = 0;
    std::uint64_t seed = 0;
    std::string engine;
};

/// Renders a SimReport. JSON output is key-ordered and fully
/// deterministic for fixed inputs and seed.
std::string render_report(const SimReport& report, int n, const ReportOptions& opts);

}  // namespace qcsim
