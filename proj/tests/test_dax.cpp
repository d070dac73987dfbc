#include <doctest.h>

#include <sstream>

#include "qcsim/dax.hpp"
#include "test_util.hpp"

using namespace qcsim;
using namespace qcsim::test;

TEST_CASE("dax encode of Y x X puts entries at linear indices 3 6 9 12") {
    const DenseMatrix yx = dense_tensor(gate_catalog_lookup("Pauli-Y").matrix,
                                        gate_catalog_lookup("Pauli-X").matrix);
    const DaxMatrix d = dax_encode(yx);
    REQUIRE(d.entries.size() == 4);
    std::vector<std::uint64_t> linear;
    for (const DaxEntry& e : d.entries) linear.push_back(e.row * d.cols + e.col);
    CHECK(linear == std::vector<std::uint64_t>{3, 6, 9, 12});
    CHECK(d.entries[0].value == cplx{0.0, -1.0});
    CHECK(d.entries[3].value == cplx{0.0, 1.0});
    CHECK(dax_memory_bytes(d) == 96);
}

TEST_CASE("dax encode edge cases") {
    CHECK(dax_encode(DenseMatrix(2, 2)).entries.empty());
    const DaxMatrix x = dax_encode(gate_catalog_lookup("Pauli-X").matrix);
    REQUIRE(x.entries.size() == 2);
    CHECK(x.entries[0] == DaxEntry{0, 1, cplx{1.0, 0.0}});
    CHECK(x.entries[1] == DaxEntry{1, 0, cplx{1.0, 0.0}});
}

TEST_CASE("dax decode round trips and errors") {
    for (const GateInfo& g : gate_catalog()) {
        const DenseMatrix& m = canonical_gate(g.name).matrix;
        CHECK(dax_decode(dax_encode(m)) == m);
    }
    DaxMatrix empty;
    empty.rows = empty.cols = 4;
    CHECK(dax_decode(empty) == DenseMatrix(4, 4));

    set_dense_cap(8);
    DaxMatrix big;
    big.rows = big.cols = 8;
    CHECK_THROWS_AS(dax_decode(big), CapacityError);
    set_dense_cap(kDefaultDenseCap);
}

TEST_CASE("dax round trip on random matrices up to 2^10") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t r = std::uint64_t(1) << (rng() % 11);
        const std::uint64_t c = std::uint64_t(1) << (rng() % 11);
        const DenseMatrix m = random_masked_matrix(r, c, 0.2, rng(), false);
        CHECK(dax_decode(dax_encode(m)) == m);
    }
}

TEST_CASE("dax mtp equals dense-then-encode for all catalog pairs") {
    for (const GateInfo& ga : gate_catalog())
        for (const GateInfo& gb : gate_catalog()) {
            const DenseMatrix& a = canonical_gate(ga.name).matrix;
            const DenseMatrix& b = canonical_gate(gb.name).matrix;
            CAPTURE(ga.name);
            CAPTURE(gb.name);
            CHECK(dax_mtp(dax_encode(a), dax_encode(b)) == dax_encode(dense_tensor(a, b)));
        }
}

TEST_CASE("dax mtp worked example Y x X") {
    const DaxMatrix y = dax_encode(gate_catalog_lookup("Pauli-Y").matrix);
    const DaxMatrix x = dax_encode(gate_catalog_lookup("Pauli-X").matrix);
    const DaxMatrix yx = dax_mtp(y, x);
    REQUIRE(yx.entries.size() == 4);
    // (row 01, col 10) = linear index 6, value 0 - 1i.
    CHECK(yx.entries[1].row == 1);
    CHECK(yx.entries[1].col == 2);
    CHECK(yx.entries[1].row * yx.cols + yx.entries[1].col == 6);
    CHECK(yx.entries[1].value == cplx{0.0, -1.0});
}

TEST_CASE("dax mtp identity and CCX x X") {
    const DaxMatrix i2 = dax_encode(DenseMatrix::identity(2));
    const DaxMatrix i4 = dax_mtp(i2, i2);
    REQUIRE(i4.entries.size() == 4);
    for (std::uint64_t k = 0; k < 4; ++k) {
        CHECK(i4.entries[k].row == k);
        CHECK(i4.entries[k].col == k);
    }

    const DenseMatrix ccx = gate_catalog_lookup("CCX").matrix;
    const DenseMatrix x = gate_catalog_lookup("Pauli-X").matrix;
    const DaxMatrix prod = dax_mtp(dax_encode(ccx), dax_encode(x));
    CHECK(prod.rows == 16);
    CHECK(prod.entries.size() == 16);
    CHECK(prod == dax_encode(dense_tensor(ccx, x)));
}

TEST_CASE("dax mtp left-fold matches dense left-fold bit-exactly") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pick = [&] {
            const GateInfo& g = gate_catalog()[rng() % gate_catalog().size()];
            return canonical_gate(g.name).matrix;
        };
        const DenseMatrix a = pick(), b = pick(), c = pick();
        const DaxMatrix left = dax_mtp(dax_mtp(dax_encode(a), dax_encode(b)), dax_encode(c));
        CHECK(left == dax_encode(dense_tensor(dense_tensor(a, b), c)));
    }
}

TEST_CASE("dax mtp drops exact zero products") {
    DenseMatrix a(1, 2), b(1, 2);
    a.at(0, 0) = {1e-200, 0.0};
    a.at(0, 1) = {1.0, 0.0};
    b.at(0, 0) = {1e-200, 0.0};
    b.at(0, 1) = {1.0, 0.0};
    const DaxMatrix p = dax_mtp(dax_encode(a), dax_encode(b));
    // 1e-200 * 1e-200 underflows to exactly zero and must not be stored.
    CHECK(p.entries.size() == 3);
    for (const DaxEntry& e : p.entries) CHECK(e.value != cplx{0.0, 0.0});
}

TEST_CASE("dax mtp capacity error on 63-bit overflow") {
    DaxMatrix a, b;
    a.rows = a.cols = std::uint64_t(1) << 40;
    b.rows = b.cols = std::uint64_t(1) << 40;
    CHECK_THROWS_AS(dax_mtp(a, b), CapacityError);
}

TEST_CASE("dax mvm") {
    const DaxMatrix x = dax_encode(gate_catalog_lookup("Pauli-X").matrix);
    StateVector s(1);
    s.amps = {cplx{0.6, 0.0}, cplx{0.8, 0.0}};
    const StateVector t = dax_mvm(x, s);
    CHECK(t.amps[0] == cplx{0.8, 0.0});
    CHECK(t.amps[1] == cplx{0.6, 0.0});

    const DenseMatrix yx = dense_tensor(gate_catalog_lookup("Pauli-Y").matrix,
                                        gate_catalog_lookup("Pauli-X").matrix);
    StateVector s2(2);  // |00>
    const StateVector t2 = dax_mvm(dax_encode(yx), s2);
    CHECK(t2.amps[3] == cplx{0.0, 1.0});
    for (int i = 0; i < 3; ++i) CHECK(t2.amps[i] == cplx{0.0, 0.0});

    const DaxMatrix i8 = dax_encode(DenseMatrix::identity(8));
    const StateVector r = random_unit_state(3, 99);
    CHECK(dax_mvm(i8, r).amps == r.amps);

    CHECK_THROWS_AS(dax_mvm(i8, s), DimensionError);
}

TEST_CASE("dax mvm matches dense mvm within 1e-12 and preserves norm") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 8; ++n) {
        // Tensor of n random single-qubit catalog gates.
        const auto single = [&] {
            const GateInfo& g = gate_catalog()[rng() % 18];
            return canonical_gate(g.name).matrix;
        };
        DenseMatrix m = single();
        for (int k = 1; k < n; ++k) m = dense_tensor(m, single());
        const StateVector s = random_unit_state(n, rng());
        const StateVector dense = dense_mvm(m, s);
        const StateVector dax = dax_mvm(dax_encode(m), s);
        CHECK(max_abs_diff(dense.amps, dax.amps) < 1e-12);
        CHECK(std::abs(dax.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("dax memory bytes") {
    CHECK(dax_memory_bytes(DaxMatrix{}) == 0);
    const DaxMatrix id = dax_encode(DenseMatrix::identity(1 << 10));
    CHECK(dax_memory_bytes(id) == 24 * 1024);
}

TEST_CASE("dax dump round trip") {
    const DenseMatrix yx = dense_tensor(gate_catalog_lookup("Pauli-Y").matrix,
                                        gate_catalog_lookup("Pauli-X").matrix);
    const DaxMatrix d = dax_encode(yx);
    std::ostringstream buf(std::ios::binary);
    dax_dump(d, buf);
    const std::string bytes = buf.str();
    CHECK(bytes.size() == 4 + 3 * 8 + 4 * 32);  // header + 4 entries
    CHECK(bytes.substr(0, 4) == "DAX1");
    std::istringstream in(bytes);
    CHECK(dax_load(in) == d);

    std::istringstream bad("nope");
    CHECK_THROWS_AS(dax_load(bad), ParseError);
}
