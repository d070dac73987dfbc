#pragma once

#include <cstdint>
#include <vector>

#include "qcsim/core.hpp"

namespace qcsim {

/// H^(x)n held as the qubit count and the single magnitude 1/sqrt(2^n);
/// signs are recomputed on demand.
struct RhMatrix {
    int n = 0;
    double value = 0.0;
};

/// Tally of quadrant-descent sign computations.
struct SignCounter {
    std::uint64_t count = 0;
};

enum class SignMethod { nonopt, quarter, block, logarithm };

const char* sign_method_name(SignMethod m);

RhMatrix rh_build(int n);

/// Sign of H^(x)n entry (r, c) via the quadrant descent over bit
/// positions: a level contributes -1 exactly when both the row and the
/// column select the lower-right quadrant. O(n) per call; bumps the
/// counter once per call.
int quadrant_sign(std::uint64_t r, std::uint64_t c, int n, SignCounter* ctr = nullptr);

/// Full row of 2^n signs, one quadrant_sign call per column.
std::vector<int> sign_row_nonoptimized(std::uint64_t r, int n, SignCounter* ctr = nullptr);

/// Upper-left quarter sign table (2^{n-1} x 2^{n-1}, row-major). The full
/// matrix follows as [[Q, Q], [Q, -Q]].
std::vector<int> sign_quarter(int n, SignCounter* ctr = nullptr);

/// Quarter-row signs with block size b: the first block computed fully,
/// one head computation per further block.
std::vector<int> sign_row_block(std::uint64_t r, int n, std::uint64_t b,
                                SignCounter* ctr = nullptr);

/// Per-row sign computations of the block method: 2^{n-1}/b + b - 1.
std::uint64_t block_row_cost(int n, std::uint64_t b);

/// Power-of-two block size minimizing block_row_cost; ties resolve to the
/// smaller size.
std::uint64_t optimal_block_size(int n);

/// Quarter-row signs from the n-1 power-of-two columns only; sign[0] is a
/// constant and costs no computation.
std::vector<int> sign_row_logarithm(std::uint64_t r, int n, SignCounter* ctr = nullptr);

struct RhMvmStats {
    std::uint64_t sign_count = 0;
    std::uint64_t madd_count = 0;
};

/// Applies H^(x)n to the state: scales by the stored magnitude, then
/// accumulates the four quadrant outputs per quarter (row, column) pair.
StateVector rh_mvm(const RhMatrix& m, const StateVector& s,
                   SignMethod method = SignMethod::logarithm, RhMvmStats* stats = nullptr,
                   std::uint64_t block_size = 0);

}  // namespace qcsim
