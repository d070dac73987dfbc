#pragma once

#include <optional>

#include "qcsim/gates.hpp"

namespace qcsim {

struct SparsityReport {
    double ratio_a = 0.0;
    double ratio_b = 0.0;
    double predicted = 0.0;
    std::optional<double> measured;
};

/// Zero ratio of a tensor product from the factor ratios:
/// R(A x B) = R(A) + (1 - R(A)) * R(B). Symmetric in its arguments.
double ratio_tensor(double r_a, double r_b);

/// Zero ratio of the m-fold tensor power: 1 - (1 - r_a)^m.
double ratio_power(double r_a, int m);

/// Bytes-per-element accounting used throughout: 16 B per dense complex
/// element, 24 B per compressed entry.
inline constexpr std::uint64_t kDenseElementBytes = 16;
inline constexpr std::uint64_t kEntryBytes = 24;

/// Memory improvement of the compressed form over dense for the
/// operation-matrix of n/arity identical gates:
/// (2^{2n} * 16) / (nnz * 24), with nnz the exact nonzero count of the
/// tensor power.
double memory_improvement(const GateSpec& gate, int n);

}  // namespace qcsim
