#pragma once

#include <string>
#include <vector>

#include "qcsim/core.hpp"

namespace qcsim {

/// A catalog gate: its unitary matrix plus the declared zero ratio of the
/// canonical (parameter-free) form.
struct GateSpec {
    std::string name;
    int arity = 1;
    std::vector<double> params;
    DenseMatrix matrix;
    double declared_zero_ratio = 0.0;
};

/// Static description of one catalog entry.
struct GateInfo {
    std::string name;
    int arity;
    int param_count;
    double zero_ratio;
};

/// All catalog gates in a fixed listing order.
const std::vector<GateInfo>& gate_catalog();

bool gate_known(const std::string& name);

/// Builds the unitary for a catalog gate, evaluating parametric gates at
/// the given angles (radians). Throws SimError for unknown names or a
/// parameter count mismatch.
GateSpec gate_catalog_lookup(const std::string& name, const std::vector<double>& params = {});

/// Generic angles used when a parametric gate is instantiated without
/// explicit parameters (catalog listings, ratio checks). Chosen so no
/// incidental zeros appear.
std::vector<double> canonical_params(const std::string& name);

}  // namespace qcsim
