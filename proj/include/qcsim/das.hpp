#pragma once

#include <iosfwd>

#include "qcsim/core.hpp"

namespace qcsim {

/// One stored nonzero in row-major scan order: the count of zeros since
/// the previous nonzero (or the row start), a flag marking the last
/// nonzero of the row, and the value. `dis` must fit in 63 bits; the
/// packed dump format keeps the flag in the top bit.
struct DasEntry {
    std::uint64_t dis = 0;
    bool last_in_row = false;
    cplx value{0.0, 0.0};

    bool operator==(const DasEntry&) const = default;
};

struct DasMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<DasEntry> entries;

    bool operator==(const DasMatrix&) const = default;
};

/// Encodes a dense matrix. Every row must contain a nonzero; the
/// flag-per-row stream cannot anchor an all-zero row.
DasMatrix das_encode(const DenseMatrix& m);
DenseMatrix das_decode(const DasMatrix& m);

/// Kronecker product on the compressed streams, distances computed from
/// the three-case rule on row starts.
DasMatrix das_mtp(const DasMatrix& a, const DasMatrix& b);

/// Single forward scan with running (row, col) cursors.
StateVector das_mvm(const DasMatrix& m, const StateVector& s);

std::uint64_t das_memory_bytes(const DasMatrix& m);

/// Binary dump: magic "DAS1", rows, cols, entry count (u64 LE), then
/// entries as (u64 with low 63 bits = dis and top bit = flag, re f64,
/// im f64), little-endian.
void das_dump(const DasMatrix& m, std::ostream& out);
DasMatrix das_load(std::istream& in);

}  // namespace qcsim
