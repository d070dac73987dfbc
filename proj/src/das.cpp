#include "qcsim/das.hpp"

#include <cstring>
#include <istream>
#include <ostream>

#include "qcsim/serial_util.hpp"

namespace qcsim {

namespace {

struct RowView {
    std::size_t begin = 0;  // entry range [begin, end) of this row
    std::size_t end = 0;
    std::uint64_t last_col = 0;  // column of the last nonzero
};

// Splits the stream into per-row entry ranges, validating cursor bounds.
std::vector<RowView> row_views(const DasMatrix& m) {
    std::vector<RowView> rows;
    std::size_t begin = 0;
    std::uint64_t col = 0;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        const DasEntry& e = m.entries[i];
        col += e.dis;
        if (col >= m.cols) throw EncodingError("DAS row overrun: distance past row width");
        if (e.last_in_row) {
            rows.push_back({begin, i + 1, col});
            begin = i + 1;
            col = 0;
        } else {
            col += 1;
        }
    }
    if (begin != m.entries.size()) throw EncodingError("DAS stream ends without a row flag");
    if (rows.size() != m.rows) throw EncodingError("DAS stream does not cover every row");
    return rows;
}

}  // namespace

DasMatrix das_encode(const DenseMatrix& m) {
    DasMatrix out;
    out.rows = m.rows;
    out.cols = m.cols;
    for (std::uint64_t r = 0; r < m.rows; ++r) {
        std::size_t row_start = out.entries.size();
        std::uint64_t gap = 0;
        for (std::uint64_t c = 0; c < m.cols; ++c) {
            const cplx v = m.at(r, c);
            if (v == cplx{0.0, 0.0}) {
                ++gap;
                continue;
            }
            out.entries.push_back({gap, false, v});
            gap = 0;
        }
        if (out.entries.size() == row_start)
            throw EncodingError("DAS cannot represent an all-zero row (row " +
                                std::to_string(r) + ")");
        out.entries.back().last_in_row = true;
    }
    return out;
}

DenseMatrix das_decode(const DasMatrix& m) {
    if (m.rows != 0 && m.cols > dense_cap() / m.rows)
        throw CapacityError("DAS decode exceeds dense cap");
    const auto rows = row_views(m);
    DenseMatrix out(m.rows, m.cols);
    for (std::uint64_t r = 0; r < m.rows; ++r) {
        std::uint64_t col = 0;
        for (std::size_t i = rows[r].begin; i < rows[r].end; ++i) {
            col += m.entries[i].dis;
            out.at(r, col) = m.entries[i].value;
            col += 1;
        }
    }
    return out;
}

DasMatrix das_mtp(const DasMatrix& a, const DasMatrix& b) {
    const std::uint64_t lim = std::uint64_t(1) << 63;
    if (b.rows != 0 && a.rows > lim / b.rows)
        throw CapacityError("DAS tensor product overflows the 63-bit distance space");
    if (b.cols != 0 && a.cols > lim / b.cols)
        throw CapacityError("DAS tensor product overflows the 63-bit distance space");

    const auto ra = row_views(a);
    const auto rb = row_views(b);

    DasMatrix out;
    out.rows = a.rows * b.rows;
    out.cols = a.cols * b.cols;
    out.entries.reserve(a.entries.size() * b.entries.size());

    for (std::uint64_t i = 0; i < a.rows; ++i)
        for (std::uint64_t j = 0; j < b.rows; ++j) {
            const std::uint64_t b_last_dis = b.cols - 1 - rb[j].last_col;
            const std::size_t row_start = out.entries.size();
            std::uint64_t pending = 0;  // zeros inherited from dropped zero products
            for (std::size_t ia = ra[i].begin; ia < ra[i].end; ++ia)
                for (std::size_t ib = rb[j].begin; ib < rb[j].end; ++ib) {
                    const DasEntry& ea = a.entries[ia];
                    const DasEntry& eb = b.entries[ib];
                    const bool a_first = ia == ra[i].begin;
                    const bool b_first = ib == rb[j].begin;
                    std::uint64_t dis;
                    if (a_first && b_first)
                        dis = ea.dis * b.cols + eb.dis;
                    else if (b_first)
                        dis = ea.dis * b.cols + eb.dis + b_last_dis;
                    else
                        dis = eb.dis;
                    const cplx v = ea.value * eb.value;
                    if (v == cplx{0.0, 0.0}) {
                        pending += dis + 1;
                        continue;
                    }
                    out.entries.push_back({dis + pending, false, v});
                    pending = 0;
                }
            if (out.entries.size() == row_start)
                throw EncodingError("DAS tensor product produced an all-zero row");
            out.entries.back().last_in_row = true;
        }
    return out;
}

StateVector das_mvm(const DasMatrix& m, const StateVector& s) {
    if (m.rows != m.cols || m.cols != s.dim()) throw DimensionError("DAS MVM shape mismatch");
    StateVector out;
    out.n = s.n;
    out.amps.assign(s.dim(), cplx{0.0, 0.0});
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    for (const DasEntry& e : m.entries) {
        col += e.dis;
        if (row >= m.rows || col >= m.cols) throw EncodingError("malformed DAS stream");
        out.amps[row] += e.value * s.amps[col];
        if (e.last_in_row) {
            ++row;
            col = 0;
        } else {
            col += 1;
        }
    }
    return out;
}

std::uint64_t das_memory_bytes(const DasMatrix& m) { return 24 * m.entries.size(); }

void das_dump(const DasMatrix& m, std::ostream& out) {
    out.write("DAS1", 4);
    write_u64(out, m.rows);
    write_u64(out, m.cols);
    write_u64(out, m.entries.size());
    const std::uint64_t flag_bit = std::uint64_t(1) << 63;
    for (const DasEntry& e : m.entries) {
        write_u64(out, e.dis | (e.last_in_row ? flag_bit : 0));
        write_f64(out, e.value.real());
        write_f64(out, e.value.imag());
    }
}

DasMatrix das_load(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "DAS1", 4) != 0) throw ParseError("bad DAS dump magic");
    DasMatrix m;
    m.rows = read_u64(in);
    m.cols = read_u64(in);
    const std::uint64_t count = read_u64(in);
    const std::uint64_t flag_bit = std::uint64_t(1) << 63;
    m.entries.resize(count);
    for (DasEntry& e : m.entries) {
        const std::uint64_t packed = read_u64(in);
        e.dis = packed & ~flag_bit;
        e.last_in_row = (packed & flag_bit) != 0;
        const double re = read_f64(in);
        const double im = read_f64(in);
        e.value = {re, im};
    }
    if (!in) throw ParseError("truncated DAS dump");
    return m;
}

}  // namespace qcsim
