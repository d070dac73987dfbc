#include <doctest.h>

#include "qcsim/sparsity.hpp"
#include "test_util.hpp"

using namespace qcsim;
using namespace qcsim::test;

TEST_CASE("ratio_tensor basics") {
    CHECK(ratio_tensor(0.5, 0.5) == 0.75);
    CHECK(ratio_tensor(0.0, 0.3) == 0.3);
    CHECK(ratio_tensor(1.0, 0.3) == 1.0);
    CHECK_THROWS_AS(ratio_tensor(-0.1, 0.5), SimError);
    CHECK_THROWS_AS(ratio_tensor(0.5, 1.1), SimError);
}

TEST_CASE("ratio_power basics") {
    CHECK(ratio_power(0.5, 1) == 0.5);
    CHECK(ratio_power(0.5, 2) == zero_ratio(dense_tensor(gate_catalog_lookup("Pauli-X").matrix,
                                                         gate_catalog_lookup("Pauli-X").matrix)));
    CHECK(ratio_power(0.375, 2) == 0.609375);
    // Two 62.5%-sparse 4x4 gates.
    const DenseMatrix ch = gate_catalog_lookup("CH").matrix;
    CHECK(ratio_power(0.625, 2) == 0.859375);
    CHECK(ratio_power(0.625, 2) == zero_ratio(dense_tensor(ch, ch)));
    CHECK_THROWS_AS(ratio_power(0.5, 0), SimError);
}

TEST_CASE("predicted ratio matches measured for catalog gate pairs") {
    for (const GateInfo& ga : gate_catalog())
        for (const GateInfo& gb : gate_catalog()) {
            const DenseMatrix& a = canonical_gate(ga.name).matrix;
            const DenseMatrix& b = canonical_gate(gb.name).matrix;
            CAPTURE(ga.name);
            CAPTURE(gb.name);
            CHECK(zero_ratio(dense_tensor(a, b)) == ratio_tensor(zero_ratio(a), zero_ratio(b)));
        }
}

TEST_CASE("predicted ratio matches measured for random 0/1 masks") {
    std::mt19937_64 rng(42);
    int asserted = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t ra = 1 << (rng() % 5), ca = 1 << (rng() % 5);
        const std::uint64_t rb = 1 << (rng() % 4), cb = 1 << (rng() % 4);
        DenseMatrix a(ra, ca), b(rb, cb);
        for (cplx& v : a.data) v = (rng() % 2) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        for (cplx& v : b.data) v = (rng() % 2) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        // 0/1 entries: no nonzero pair can multiply to zero.
        CHECK(zero_ratio(dense_tensor(a, b)) == ratio_tensor(zero_ratio(a), zero_ratio(b)));
        ++asserted;
    }
    CHECK(asserted == 1000);
}

TEST_CASE("ratio_tensor symmetry and monotonicity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double a = u(rng), b = u(rng);
        // Symmetric in exact arithmetic; the two evaluation orders may
        // round differently by an ulp.
        CHECK(ratio_tensor(a, b) == doctest::Approx(ratio_tensor(b, a)).epsilon(1e-14));
        CHECK(ratio_tensor(a, b) >= std::max(a, b));
    }
    for (int m = 1; m < 20; ++m)
        CHECK(ratio_power(0.3, m + 1) >= ratio_power(0.3, m));
}

TEST_CASE("memory improvement") {
    const GateSpec x = gate_catalog_lookup("Pauli-X");
    for (int n = 1; n <= 20; ++n)
        CHECK(memory_improvement(x, n) == (2.0 / 3.0) * std::exp2(n));

    // Y x X treated as a single two-qubit step: 256 B dense vs 96 B.
    GateSpec yx;
    yx.arity = 2;
    yx.matrix = dense_tensor(gate_catalog_lookup("Pauli-Y").matrix, x.matrix);
    CHECK(memory_improvement(yx, 2) == doctest::Approx(256.0 / 96.0).epsilon(1e-15));

    const GateSpec id = gate_catalog_lookup("Identity");
    CHECK(memory_improvement(id, 1) == doctest::Approx(64.0 / 48.0).epsilon(1e-15));

    CHECK_THROWS_AS(memory_improvement(yx, 3), SimError);
}
