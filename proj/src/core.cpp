#include "qcsim/core.hpp"

#include <atomic>
#include <cmath>

namespace qcsim {

namespace {
std::atomic<std::uint64_t> g_dense_cap{kDefaultDenseCap};
}

std::uint64_t dense_cap() { return g_dense_cap.load(std::memory_order_relaxed); }

void set_dense_cap(std::uint64_t cap) { g_dense_cap.store(cap, std::memory_order_relaxed); }

DenseMatrix DenseMatrix::identity(std::uint64_t dim) {
    DenseMatrix m(dim, dim);
    for (std::uint64_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

StateVector::StateVector(int qubits, std::uint64_t basis_index) : n(qubits) {
    if (qubits < 1 || qubits > 62) throw DimensionError("state vector needs 1 <= n <= 62 qubits");
    const std::uint64_t dim = std::uint64_t(1) << qubits;
    if (basis_index >= dim) throw DimensionError("initial basis index out of range");
    amps.assign(dim, cplx{0.0, 0.0});
    amps[basis_index] = 1.0;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) p[i] = std::norm(amps[i]);
    return p;
}

std::uint64_t nonzero_count(const DenseMatrix& m) {
    std::uint64_t nnz = 0;
    for (const cplx& v : m.data)
        if (v != cplx{0.0, 0.0}) ++nnz;
    return nnz;
}

double zero_ratio(const DenseMatrix& m) {
    if (m.data.empty()) return 0.0;
    const std::uint64_t zeros = m.data.size() - nonzero_count(m);
    return double(zeros) / double(m.data.size());
}

DenseMatrix dense_tensor(const DenseMatrix& a, const DenseMatrix& b) {
    const std::uint64_t rows = a.rows * b.rows;
    const std::uint64_t cols = a.cols * b.cols;
    if (rows != 0 && cols > dense_cap() / rows)
        throw CapacityError("dense tensor product exceeds dense cap of " +
                            std::to_string(dense_cap()) + " elements");
    DenseMatrix out(rows, cols);
    for (std::uint64_t ra = 0; ra < a.rows; ++ra)
        for (std::uint64_t rb = 0; rb < b.rows; ++rb) {
            const std::uint64_t r = ra * b.rows + rb;
            for (std::uint64_t ca = 0; ca < a.cols; ++ca) {
                const cplx va = a.at(ra, ca);
                for (std::uint64_t cb = 0; cb < b.cols; ++cb)
                    out.at(r, ca * b.cols + cb) = va * b.at(rb, cb);
            }
        }
    return out;
}

StateVector dense_mvm(const DenseMatrix& m, const StateVector& s) {
    if (m.rows != m.cols || m.cols != s.dim())
        throw DimensionError("dense MVM shape mismatch");
    StateVector out;
    out.n = s.n;
    out.amps.assign(s.dim(), cplx{0.0, 0.0});
    for (std::uint64_t r = 0; r < m.rows; ++r) {
        cplx acc{0.0, 0.0};
        const cplx* row = m.data.data() + r * m.cols;
        for (std::uint64_t c = 0; c < m.cols; ++c) acc += row[c] * s.amps[c];
        out.amps[r] = acc;
    }
    return out;
}

}  // namespace qcsim
