#include <doctest.h>

#include "qcsim/rh.hpp"
#include "test_util.hpp"

using namespace qcsim;
using namespace qcsim::test;

namespace {

// Full sign table reconstructed from the quarter: [[Q, Q], [Q, -Q]].
std::vector<int> expand_quarter(const std::vector<int>& q, int n) {
    const std::uint64_t half = std::uint64_t(1) << (n - 1);
    const std::uint64_t dim = half * 2;
    std::vector<int> full(dim * dim);
    for (std::uint64_t r = 0; r < half; ++r)
        for (std::uint64_t c = 0; c < half; ++c) {
            const int s = q[r * half + c];
            full[r * dim + c] = s;
            full[r * dim + c + half] = s;
            full[(r + half) * dim + c] = s;
            full[(r + half) * dim + c + half] = -s;
        }
    return full;
}

DenseMatrix dense_hadamard_power(int n) {
    const DenseMatrix h = canonical_gate("Hadamard").matrix;
    DenseMatrix m = h;
    for (int k = 1; k < n; ++k) m = dense_tensor(m, h);
    return m;
}

}  // namespace

TEST_CASE("rh build") {
    CHECK(rh_build(1).value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(rh_build(2).value == 0.5);
    CHECK(rh_build(34).value == std::exp2(-17));
    for (int n = 1; n <= 40; ++n) {
        const RhMatrix m = rh_build(n);
        CHECK(std::abs(m.value * m.value * std::exp2(n) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(rh_build(0), DimensionError);
}

TEST_CASE("quadrant sign worked example and oracle equivalence") {
    CHECK(quadrant_sign(2, 7, 3) == -1);
    for (std::uint64_t c = 0; c < 8; ++c) CHECK(quadrant_sign(0, c, 3) == 1);
    for (int n = 1; n <= 10; ++n) {
        const std::uint64_t dim = std::uint64_t(1) << n;
        for (std::uint64_t r = 0; r < dim; ++r)
            for (std::uint64_t c = 0; c < dim; ++c)
                CHECK(quadrant_sign(r, c, n) == popcount_sign(r, c));
    }
    CHECK_THROWS_AS(quadrant_sign(8, 0, 3), DimensionError);
}

TEST_CASE("quadrant sign counter") {
    SignCounter ctr;
    quadrant_sign(1, 1, 4, &ctr);
    quadrant_sign(2, 3, 4, &ctr);
    CHECK(ctr.count == 2);
}

TEST_CASE("nonoptimized rows") {
    SignCounter ctr;
    CHECK(sign_row_nonoptimized(3, 2, &ctr) == std::vector<int>{1, -1, -1, 1});
    CHECK(ctr.count == 4);
    CHECK(sign_row_nonoptimized(1, 1) == std::vector<int>{1, -1});

    SignCounter total;
    for (std::uint64_t r = 0; r < 8; ++r) sign_row_nonoptimized(r, 3, &total);
    CHECK(total.count == 64);
}

TEST_CASE("quarter method") {
    SignCounter ctr;
    const auto q = sign_quarter(5, &ctr);
    CHECK(ctr.count == 256);
    CHECK(q.size() == 256);

    CHECK(sign_quarter(1) == std::vector<int>{1});

    for (int n = 1; n <= 8; ++n) {
        const auto full = expand_quarter(sign_quarter(n), n);
        const std::uint64_t dim = std::uint64_t(1) << n;
        for (std::uint64_t r = 0; r < dim; ++r) {
            const auto row = sign_row_nonoptimized(r, n);
            for (std::uint64_t c = 0; c < dim; ++c) CHECK(full[r * dim + c] == row[c]);
        }
    }
}

TEST_CASE("block method") {
    SignCounter ctr;
    sign_row_block(3, 5, 2, &ctr);
    CHECK(ctr.count == 9);
    ctr.count = 0;
    sign_row_block(3, 5, 4, &ctr);
    CHECK(ctr.count == 7);

    // b = 1 degenerates to the quarter method's per-row cost.
    ctr.count = 0;
    const auto row = sign_row_block(5, 5, 1, &ctr);
    CHECK(ctr.count == 16);
    for (std::uint64_t c = 0; c < 16; ++c) CHECK(row[c] == popcount_sign(5, c));

    CHECK_THROWS_AS(sign_row_block(0, 5, 3, nullptr), SimError);
    CHECK_THROWS_AS(sign_row_block(0, 5, 32, nullptr), SimError);
}

TEST_CASE("optimal block size") {
    CHECK(optimal_block_size(5) == 4);
    CHECK(block_row_cost(5, 4) == 7);
    CHECK(optimal_block_size(2) == 1);  // tie between 1 and 2 goes low
    CHECK(optimal_block_size(9) == 16);
    CHECK(block_row_cost(9, 16) == 31);
    CHECK_THROWS_AS(optimal_block_size(1), SimError);

    for (int n = 2; n <= 20; ++n) {
        const std::uint64_t best = optimal_block_size(n);
        for (std::uint64_t b = 1; b <= (std::uint64_t(1) << (n - 1)); b <<= 1) {
            CHECK(block_row_cost(n, best) <= block_row_cost(n, b));
            if (block_row_cost(n, b) == block_row_cost(n, best)) CHECK(best <= b);
        }
    }
}

TEST_CASE("logarithm method") {
    SignCounter ctr;
    const auto row = sign_row_logarithm(9, 5, &ctr);
    CHECK(ctr.count == 4);  // indices 1, 2, 4, 8

    CHECK(sign_row_logarithm(0, 1) == std::vector<int>{1});
    SignCounter zero;
    sign_row_logarithm(0, 1, &zero);
    CHECK(zero.count == 0);

    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t half = std::uint64_t(1) << (n - 1);
        for (std::uint64_t r = 0; r < half; r += std::max<std::uint64_t>(1, half / 64)) {
            const auto lr = sign_row_logarithm(r, n);
            for (std::uint64_t c = 0; c < half; ++c) CHECK(lr[c] == popcount_sign(r, c));
        }
    }
}

TEST_CASE("all four methods agree exhaustively") {
    for (int n = 1; n <= 8; ++n) {
        const std::uint64_t half = std::uint64_t(1) << (n - 1);
        const std::uint64_t b = n >= 2 ? optimal_block_size(n) : 1;
        const auto quarter = sign_quarter(n);
        for (std::uint64_t r = 0; r < half; ++r) {
            const auto blk = sign_row_block(r, n, b);
            const auto log = sign_row_logarithm(r, n);
            for (std::uint64_t c = 0; c < half; ++c) {
                CHECK(blk[c] == quarter[r * half + c]);
                CHECK(log[c] == quarter[r * half + c]);
            }
        }
    }
}

TEST_CASE("rh mvm single qubit and uniform superposition") {
    const RhMatrix h1 = rh_build(1);
    StateVector s(1);
    const StateVector t = rh_mvm(h1, s);
    CHECK(t.amps[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(t.amps[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    const RhMatrix h3 = rh_build(3);
    StateVector s3(3);
    const StateVector t3 = rh_mvm(h3, s3);
    for (const cplx& a : t3.amps)
        CHECK(a.real() == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));

    CHECK_THROWS_AS(rh_mvm(h3, s), DimensionError);
}

TEST_CASE("rh mvm matches the dense oracle for every method") {
    for (int n : {1, 2, 3, 6, 10}) {
        const DenseMatrix hp = dense_hadamard_power(n);
        const StateVector s = random_unit_state(n, 1000 + n);
        const StateVector want = dense_mvm(hp, s);
        for (SignMethod m : {SignMethod::nonopt, SignMethod::quarter, SignMethod::block,
                             SignMethod::logarithm}) {
            if (m == SignMethod::block && n < 2) continue;
            const StateVector got = rh_mvm(rh_build(n), s, m);
            CHECK(max_abs_diff(want.amps, got.amps) < 1e-10);
        }
    }
}

TEST_CASE("rh mvm is a norm-preserving involution") {
    for (int n : {1, 4, 9}) {
        const StateVector s = random_unit_state(n, 2000 + n);
        const StateVector once = rh_mvm(rh_build(n), s);
        CHECK(std::abs(once.norm() - 1.0) < 1e-9);
        const StateVector twice = rh_mvm(rh_build(n), once);
        CHECK(max_abs_diff(s.amps, twice.amps) < 1e-9);
    }
}

TEST_CASE("rh mvm counter totals match the method formulas") {
    for (int n = 2; n <= 10; ++n) {
        const std::uint64_t half = std::uint64_t(1) << (n - 1);
        const StateVector s = random_unit_state(n, 3000 + n);
        RhMvmStats stats;

        rh_mvm(rh_build(n), s, SignMethod::nonopt, &stats);
        CHECK(stats.sign_count == 4 * half * half);

        rh_mvm(rh_build(n), s, SignMethod::quarter, &stats);
        CHECK(stats.sign_count == half * half);

        for (std::uint64_t b = 1; b <= half; b <<= 1) {
            rh_mvm(rh_build(n), s, SignMethod::block, &stats, b);
            CHECK(stats.sign_count == half * (half / b + b - 1));
        }

        rh_mvm(rh_build(n), s, SignMethod::logarithm, &stats);
        CHECK(stats.sign_count == half * std::uint64_t(n - 1));
        CHECK(stats.madd_count == 4 * half * half);
    }
}
