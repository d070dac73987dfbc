#include "qcsim/sparsity.hpp"

#include <cmath>

namespace qcsim {

double ratio_tensor(double r_a, double r_b) {
    if (r_a < 0.0 || r_a > 1.0 || r_b < 0.0 || r_b > 1.0)
        throw SimError("zero ratios must lie in [0, 1]");
    return r_a + (1.0 - r_a) * r_b;
}

double ratio_power(double r_a, int m) {
    if (r_a < 0.0 || r_a > 1.0) throw SimError("zero ratio must lie in [0, 1]");
    if (m < 1) throw SimError("tensor power needs m >= 1");
    return 1.0 - std::pow(1.0 - r_a, m);
}

double memory_improvement(const GateSpec& gate, int n) {
    if (n < 1 || n % gate.arity != 0)
        throw SimError("qubit count must be a positive multiple of the gate arity");
    const int m = n / gate.arity;
    const double gate_nnz = double(nonzero_count(gate.matrix));
    const double nnz = std::pow(gate_nnz, m);
    const double dense_bytes = std::ldexp(double(kDenseElementBytes), 2 * n);
    return dense_bytes / (nnz * double(kEntryBytes));
}

}  // namespace qcsim
