#include "qcsim/dax.hpp"

#include <cassert>
#include <cstring>
#include <istream>
#include <ostream>

#include "qcsim/serial_util.hpp"

namespace qcsim {

namespace {

// Half-open ranges of entries sharing a row, in row order.
struct RowGroup {
    std::uint64_t row;
    std::size_t begin;
    std::size_t end;
};

std::vector<RowGroup> row_groups(const DaxMatrix& m) {
    std::vector<RowGroup> groups;
    std::size_t i = 0;
    while (i < m.entries.size()) {
        std::size_t j = i;
        while (j < m.entries.size() && m.entries[j].row == m.entries[i].row) ++j;
        groups.push_back({m.entries[i].row, i, j});
        i = j;
    }
    return groups;
}

}  // namespace

DaxMatrix dax_encode(const DenseMatrix& m) {
    DaxMatrix out;
    out.rows = m.rows;
    out.cols = m.cols;
    for (std::uint64_t r = 0; r < m.rows; ++r)
        for (std::uint64_t c = 0; c < m.cols; ++c) {
            const cplx v = m.at(r, c);
            if (v != cplx{0.0, 0.0}) out.entries.push_back({r, c, v});
        }
    return out;
}

DenseMatrix dax_decode(const DaxMatrix& m) {
    if (m.rows != 0 && m.cols > dense_cap() / m.rows)
        throw CapacityError("DAX decode exceeds dense cap");
    DenseMatrix out(m.rows, m.cols);
    for (const DaxEntry& e : m.entries) {
        if (e.row >= m.rows || e.col >= m.cols) throw EncodingError("DAX entry out of range");
        out.at(e.row, e.col) = e.value;
    }
    return out;
}

DaxMatrix dax_mtp(const DaxMatrix& a, const DaxMatrix& b) {
    const std::uint64_t lim = std::uint64_t(1) << 63;
    if (b.rows != 0 && a.rows > lim / b.rows)
        throw CapacityError("DAX tensor product overflows the 63-bit row space");
    if (b.cols != 0 && a.cols > lim / b.cols)
        throw CapacityError("DAX tensor product overflows the 63-bit column space");

    DaxMatrix out;
    out.rows = a.rows * b.rows;
    out.cols = a.cols * b.cols;
    out.entries.reserve(a.entries.size() * b.entries.size());

    // Row-blocked generation emits entries already in canonical order:
    // result rows are (ra, rb) lexicographic and, within a row, columns
    // follow (ca, cb) since both inputs are sorted.
    const auto ga = row_groups(a);
    const auto gb = row_groups(b);
    for (const RowGroup& ra : ga)
        for (const RowGroup& rb : gb) {
            const std::uint64_t row = ra.row * b.rows + rb.row;
            for (std::size_t i = ra.begin; i < ra.end; ++i)
                for (std::size_t j = rb.begin; j < rb.end; ++j) {
                    const cplx v = a.entries[i].value * b.entries[j].value;
                    if (v == cplx{0.0, 0.0}) continue;
                    out.entries.push_back({row, a.entries[i].col * b.cols + b.entries[j].col, v});
                }
        }

#ifndef NDEBUG
    for (std::size_t i = 1; i < out.entries.size(); ++i) {
        const auto& p = out.entries[i - 1];
        const auto& q = out.entries[i];
        assert(p.row * out.cols + p.col < q.row * out.cols + q.col);
    }
#endif
    return out;
}

StateVector dax_mvm(const DaxMatrix& m, const StateVector& s) {
    if (m.rows != m.cols || m.cols != s.dim()) throw DimensionError("DAX MVM shape mismatch");
    StateVector out;
    out.n = s.n;
    out.amps.assign(s.dim(), cplx{0.0, 0.0});
    for (const DaxEntry& e : m.entries) out.amps[e.row] += e.value * s.amps[e.col];
    return out;
}

std::uint64_t dax_memory_bytes(const DaxMatrix& m) { return 24 * m.entries.size(); }

void dax_dump(const DaxMatrix& m, std::ostream& out) {
    out.write("DAX1", 4);
    write_u64(out, m.rows);
    write_u64(out, m.cols);
    write_u64(out, m.entries.size());
    for (const DaxEntry& e : m.entries) {
        write_u64(out, e.row);
        write_u64(out, e.col);
        write_f64(out, e.value.real());
        write_f64(out, e.value.imag());
    }
}

DaxMatrix dax_load(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "DAX1", 4) != 0) throw ParseError("bad DAX dump magic");
    DaxMatrix m;
    m.rows = read_u64(in);
    m.cols = read_u64(in);
    const std::uint64_t count = read_u64(in);
    m.entries.resize(count);
    for (DaxEntry& e : m.entries) {
        e.row = read_u64(in);
        e.col = read_u64(in);
        const double re = read_f64(in);
        const double im = read_f64(in);
        e.value = {re, im};
    }
    if (!in) throw ParseError("truncated DAX dump");
    return m;
}

}  // namespace qcsim
