#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcsim {

using cplx = std::complex<double>;

class SimError : public std::runtime_error {
public:
    explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

class CapacityError : public SimError {
public:
    explicit CapacityError(const std::string& what) : SimError(what) {}
};

class DimensionError : public SimError {
public:
    explicit DimensionError(const std::string& what) : SimError(what) {}
};

class EncodingError : public SimError {
public:
    explicit EncodingError(const std::string& what) : SimError(what) {}
};

class ParseError : public SimError {
public:
    explicit ParseError(const std::string& what) : SimError(what) {}
};

/// Maximum element count a dense matrix may hold before operations
/// refuse to materialize it. Overridable via the CLI's --dense-cap.
inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t(1) << 26;

std::uint64_t dense_cap();
void set_dense_cap(std::uint64_t cap);

inline bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// Row-major dense complex matrix. Shapes are powers of two.
struct DenseMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<cplx> data;

    DenseMatrix() = default;
    DenseMatrix(std::uint64_t r, std::uint64_t c) : rows(r), cols(c), data(r * c) {}

    cplx& at(std::uint64_t r, std::uint64_t c) { return data[r * cols + c]; }
    const cplx& at(std::uint64_t r, std::uint64_t c) const { return data[r * cols + c]; }

    static DenseMatrix identity(std::uint64_t dim);

    bool operator==(const DenseMatrix& o) const = default;
};

/// Full state of an n-qubit register: 2^n amplitudes, unit 2-norm.
/// Qubit 0 is the most significant bit of the basis index.
struct StateVector {
    int n = 0;
    std::vector<cplx> amps;

    StateVector() = default;
    explicit StateVector(int qubits, std::uint64_t basis_index = 0);

    std::uint64_t dim() const { return amps.size(); }
    double norm() const;
    std::vector<double> probabilities() const;
};

std::uint64_t nonzero_count(const DenseMatrix& m);
double zero_ratio(const DenseMatrix& m);

DenseMatrix dense_tensor(const DenseMatrix& a, const DenseMatrix& b);
StateVector dense_mvm(const DenseMatrix& m, const StateVector& s);

}  // namespace qcsim
