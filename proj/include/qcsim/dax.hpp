#pragma once

#include <iosfwd>

#include "qcsim/core.hpp"

namespace qcsim {

/// One stored nonzero: split (row, col) indices plus the complex value.
/// The single decimal index of the on-disk and display form is derived as
/// row * cols + col.
struct DaxEntry {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    cplx value{0.0, 0.0};

    bool operator==(const DaxEntry&) const = default;
};

/// Compressed matrix holding only nonzeros, strictly sorted by linear
/// index row * cols + col.
struct DaxMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<DaxEntry> entries;

    bool operator==(const DaxMatrix&) const = default;
};

DaxMatrix dax_encode(const DenseMatrix& m);
DenseMatrix dax_decode(const DaxMatrix& m);

/// Kronecker product computed directly on the compressed entries; never
/// materializes dense data. Exactly zero products are dropped.
DaxMatrix dax_mtp(const DaxMatrix& a, const DaxMatrix& b);

StateVector dax_mvm(const DaxMatrix& m, const StateVector& s);

/// Accounting charge: 24 bytes per stored entry.
std::uint64_t dax_memory_bytes(const DaxMatrix& m);

/// Binary dump: magic "DAX1", rows, cols, entry count (u64 LE), then
/// entries as (row u64, col u64, re f64, im f64), all little-endian.
void dax_dump(const DaxMatrix& m, std::ostream& out);
DaxMatrix dax_load(std::istream& in);

}  // namespace qcsim
