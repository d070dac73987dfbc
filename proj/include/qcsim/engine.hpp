#pragma once

#include "qcsim/circuit.hpp"
#include "qcsim/das.hpp"
#include "qcsim/dax.hpp"
#include "qcsim/rh.hpp"

namespace qcsim {

enum class Engine { dense, dax, das, rh_dax };

const char* engine_name(Engine e);
Engine engine_from_name(const std::string& name);

/// Per-step execution record.
struct StepReport {
    std::string structure;          // dense | dax | das | rh
    int stage = 0;
    std::uint64_t matrix_bytes = 0;     // accounting bytes of the structure used
    std::uint64_t dense_bytes = 0;      // 2^{2n} * 16 baseline
    std::uint64_t entry_count = 0;      // stored nonzeros (0 for rh)
    std::uint64_t sign_count = 0;
    std::uint64_t madd_count = 0;
};

struct SimReport {
    StateVector final;
    std::vector<double> probabilities;
    std::vector<StepReport> steps;
    std::uint64_t total_sign_count = 0;
    std::uint64_t total_madd_count = 0;
};

/// Whole-width operation-matrix of one step in the requested structure.
/// Compressed engines fold per-position factors without materializing
/// dense intermediates.
DenseMatrix step_matrix_dense(const CircuitStep& step, int n);
DaxMatrix step_matrix_dax(const CircuitStep& step, int n);
DasMatrix step_matrix_das(const CircuitStep& step, int n);

struct SimOptions {
    SignMethod sign_method = SignMethod::logarithm;
    std::uint64_t block_size = 0;  // 0 = optimal
};

SimReport simulate(const Circuit& c, Engine engine, const SimOptions& opts = {});

/// Per-step byte accounting without running the state update.
std::vector<StepReport> memory_report(const Circuit& c, Engine engine);

}  // namespace qcsim
