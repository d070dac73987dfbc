#include "qcsim/rh.hpp"

#include <bit>
#include <cmath>

namespace qcsim {

const char* sign_method_name(SignMethod m) {
    switch (m) {
        case SignMethod::nonopt: return "nonopt";
        case SignMethod::quarter: return "quarter";
        case SignMethod::block: return "block";
        case SignMethod::logarithm: return "logarithm";
    }
    return "?";
}

RhMatrix rh_build(int n) {
    if (n < 1) throw DimensionError("RH needs n >= 1");
    return {n, std::exp2(-0.5 * n)};
}

int quadrant_sign(std::uint64_t r, std::uint64_t c, int n, SignCounter* ctr) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    if (r >= dim || c >= dim) throw DimensionError("sign index out of range");
    if (ctr) ++ctr->count;
    int sign = 1;
    for (int level = n - 1; level >= 0; --level) {
        const std::uint64_t bit = std::uint64_t(1) << level;
        if ((r & bit) && (c & bit)) sign = -sign;
    }
    return sign;
}

std::vector<int> sign_row_nonoptimized(std::uint64_t r, int n, SignCounter* ctr) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    std::vector<int> row(dim);
    for (std::uint64_t c = 0; c < dim; ++c) row[c] = quadrant_sign(r, c, n, ctr);
    return row;
}

std::vector<int> sign_quarter(int n, SignCounter* ctr) {
    if (n < 1) throw DimensionError("sign table needs n >= 1");
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    std::vector<int> q(half * half);
    for (std::uint64_t r = 0; r < half; ++r)
        for (std::uint64_t c = 0; c < half; ++c) q[r * half + c] = quadrant_sign(r, c, n, ctr);
    return q;
}

std::uint64_t block_row_cost(int n, std::uint64_t b) {
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    return half / b + b - 1;
}

std::vector<int> sign_row_block(std::uint64_t r, int n, std::uint64_t b, SignCounter* ctr) {
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    if (!is_pow2(b) || b > half) throw SimError("block size must be a power of two within the row");
    std::vector<int> row(half);
    for (std::uint64_t c = 0; c < b; ++c) row[c] = quadrant_sign(r, c, n, ctr);
    for (std::uint64_t head = b; head < half; head += b) {
        const int s = quadrant_sign(r, head, n, ctr);
        for (std::uint64_t k = 0; k < b; ++k) row[head + k] = s * row[k];
    }
    return row;
}

std::uint64_t optimal_block_size(int n) {
    if (n < 2) throw SimError("block-size optimum needs n >= 2");
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    std::uint64_t best = 1;
    for (std::uint64_t b = 1; b <= half; b <<= 1)
        if (block_row_cost(n, b) < block_row_cost(n, best)) best = b;
    return best;
}

std::vector<int> sign_row_logarithm(std::uint64_t r, int n, SignCounter* ctr) {
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    std::vector<int> row(half);
    row[0] = 1;
    for (std::uint64_t c = 1; c < half; ++c) {
        if (is_pow2(c)) {
            row[c] = quadrant_sign(r, c, n, ctr);
        } else {
            const std::uint64_t msb = std::bit_floor(c);
            row[c] = row[msb] * row[c - msb];
        }
    }
    return row;
}

StateVector rh_mvm(const RhMatrix& m, const StateVector& s, SignMethod method,
                   RhMvmStats* stats, std::uint64_t block_size) {
    if (m.n < 1) throw DimensionError("RH MVM needs n >= 1");
    if (s.n != m.n) throw DimensionError("RH MVM qubit count mismatch");
    const std::uint64_t half = std::uint64_t(1) << (m.n - 1);

    SignCounter ctr;
    StateVector scaled = s;
    for (cplx& a : scaled.amps) a *= m.value;

    StateVector out;
    out.n = s.n;
    out.amps.assign(s.dim(), cplx{0.0, 0.0});

    std::uint64_t b = block_size;
    if (method == SignMethod::block && b == 0)
        b = m.n >= 2 ? optimal_block_size(m.n) : 1;

    for (std::uint64_t r = 0; r < half; ++r) {
        if (method == SignMethod::nonopt) {
            // Every sign of the full matrix is computed individually.
            for (std::uint64_t c = 0; c < half; ++c) {
                const int s00 = quadrant_sign(r, c, m.n, &ctr);
                const int s01 = quadrant_sign(r, c + half, m.n, &ctr);
                const int s10 = quadrant_sign(r + half, c, m.n, &ctr);
                const int s11 = quadrant_sign(r + half, c + half, m.n, &ctr);
                out.amps[r] += double(s00) * scaled.amps[c];
                out.amps[r] += double(s01) * scaled.amps[c + half];
                out.amps[r + half] += double(s10) * scaled.amps[c];
                out.amps[r + half] += double(s11) * scaled.amps[c + half];
            }
            continue;
        }

        std::vector<int> signs;
        switch (method) {
            case SignMethod::quarter: {
                signs.resize(half);
                for (std::uint64_t c = 0; c < half; ++c)
                    signs[c] = quadrant_sign(r, c, m.n, &ctr);
                break;
            }
            case SignMethod::block:
                signs = sign_row_block(r, m.n, b, &ctr);
                break;
            case SignMethod::logarithm:
                signs = sign_row_logarithm(r, m.n, &ctr);
                break;
            default: break;
        }
        for (std::uint64_t c = 0; c < half; ++c) {
            const double sg = double(signs[c]);
            out.amps[r] += sg * scaled.amps[c];
            out.amps[r] += sg * scaled.amps[c + half];
            out.amps[r + half] += sg * scaled.amps[c];
            out.amps[r + half] -= sg * scaled.amps[c + half];
        }
    }

    if (stats) {
        stats->sign_count = ctr.count;
        stats->madd_count = 4 * half * half;
    }
    return out;
}

}  // namespace qcsim
