#include "qcsim/gates.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace qcsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const cplx kI{0.0, 1.0};

cplx expi(double t) { return {std::cos(t), std::sin(t)}; }

DenseMatrix m2(cplx a, cplx b, cplx c, cplx d) {
    DenseMatrix m(2, 2);
    m.data = {a, b, c, d};
    return m;
}

DenseMatrix m4(std::initializer_list<cplx> vals) {
    DenseMatrix m(4, 4);
    m.data = vals;
    return m;
}

// Controlled single-qubit gate; the control is the higher-order qubit.
DenseMatrix controlled(const DenseMatrix& u) {
    DenseMatrix m = DenseMatrix::identity(4);
    for (std::uint64_t r = 0; r < 2; ++r)
        for (std::uint64_t c = 0; c < 2; ++c) m.at(2 + r, 2 + c) = u.at(r, c);
    return m;
}

DenseMatrix hadamard() { return m2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2); }

DenseMatrix sx() {
    const cplx p{0.5, 0.5}, q{0.5, -0.5};
    return m2(p, q, q, p);
}

DenseMatrix sxdg() {
    const cplx p{0.5, -0.5}, q{0.5, 0.5};
    return m2(p, q, q, p);
}

DenseMatrix pauli_x() { return m2(0, 1, 1, 0); }
DenseMatrix pauli_y() { return m2(0, -kI, kI, 0); }
DenseMatrix pauli_z() { return m2(1, 0, 0, -1); }

DenseMatrix rx(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return m2(c, -kI * s, -kI * s, c);
}

DenseMatrix ry(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return m2(c, -s, s, c);
}

DenseMatrix rz(double t) { return m2(expi(-t / 2), 0, 0, expi(t / 2)); }

DenseMatrix rgate(double t, double phi) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return m2(c, -kI * expi(-phi) * s, -kI * expi(phi) * s, c);
}

DenseMatrix ugate(double t, double phi, double lam) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return m2(c, -expi(lam) * s, expi(phi) * s, expi(phi + lam) * c);
}

DenseMatrix u2gate(double phi, double lam) {
    return m2(kInvSqrt2, -expi(lam) * kInvSqrt2, expi(phi) * kInvSqrt2,
              expi(phi + lam) * kInvSqrt2);
}

DenseMatrix phase(double lam) { return m2(1, 0, 0, expi(lam)); }

DenseMatrix rxx(double t) {
    const cplx c = std::cos(t / 2), s = -kI * std::sin(t / 2);
    return m4({c, 0, 0, s,
               0, c, s, 0,
               0, s, c, 0,
               s, 0, 0, c});
}

DenseMatrix ryy(double t) {
    const cplx c = std::cos(t / 2), s = kI * std::sin(t / 2);
    return m4({c, 0, 0, s,
               0, c, -s, 0,
               0, -s, c, 0,
               s, 0, 0, c});
}

DenseMatrix rzx(double t) {
    const cplx c = std::cos(t / 2), s = -kI * std::sin(t / 2);
    return m4({c, s, 0, 0,
               s, c, 0, 0,
               0, 0, c, -s,
               0, 0, -s, c});
}

// (I x X - X x Y) / sqrt(2)
DenseMatrix ecr() {
    const cplx h = kInvSqrt2;
    return m4({0, h, 0, kI * h,
               h, 0, -kI * h, 0,
               0, kI * h, 0, h,
               -kI * h, 0, h, 0});
}

DenseMatrix rzz(double t) {
    DenseMatrix m(4, 4);
    m.at(0, 0) = expi(-t / 2);
    m.at(1, 1) = expi(t / 2);
    m.at(2, 2) = expi(t / 2);
    m.at(3, 3) = expi(-t / 2);
    return m;
}

DenseMatrix swap_gate() {
    return m4({1, 0, 0, 0,
               0, 0, 1, 0,
               0, 1, 0, 0,
               0, 0, 0, 1});
}

DenseMatrix iswap_gate() {
    return m4({1, 0, 0, 0,
               0, 0, kI, 0,
               0, kI, 0, 0,
               0, 0, 0, 1});
}

DenseMatrix dcx() {
    return m4({1, 0, 0, 0,
               0, 0, 0, 1,
               0, 1, 0, 0,
               0, 0, 1, 0});
}

DenseMatrix ccx() {
    DenseMatrix m = DenseMatrix::identity(8);
    m.at(6, 6) = 0;
    m.at(7, 7) = 0;
    m.at(6, 7) = 1;
    m.at(7, 6) = 1;
    return m;
}

DenseMatrix cswap() {
    DenseMatrix m = DenseMatrix::identity(8);
    m.at(5, 5) = 0;
    m.at(6, 6) = 0;
    m.at(5, 6) = 1;
    m.at(6, 5) = 1;
    return m;
}

struct Entry {
    int arity;
    int param_count;
    double ratio;
    DenseMatrix (*build)(const std::vector<double>&);
};

const std::map<std::string, Entry>& table() {
    using P = const std::vector<double>&;
    static const std::map<std::string, Entry> t = {
        // [2,2] / 0%
        {"Hadamard", {1, 0, 0.0, [](P) { return hadamard(); }}},
        {"SX", {1, 0, 0.0, [](P) { return sx(); }}},
        {"SXdg", {1, 0, 0.0, [](P) { return sxdg(); }}},
        {"R", {1, 2, 0.0, [](P p) { return rgate(p[0], p[1]); }}},
        {"RX", {1, 1, 0.0, [](P p) { return rx(p[0]); }}},
        {"RY", {1, 1, 0.0, [](P p) { return ry(p[0]); }}},
        {"U", {1, 3, 0.0, [](P p) { return ugate(p[0], p[1], p[2]); }}},
        {"U2", {1, 2, 0.0, [](P p) { return u2gate(p[0], p[1]); }}},
        // [2,2] / 50%
        {"Identity", {1, 0, 0.5, [](P) { return DenseMatrix::identity(2); }}},
        {"Pauli-X", {1, 0, 0.5, [](P) { return pauli_x(); }}},
        {"Pauli-Y", {1, 0, 0.5, [](P) { return pauli_y(); }}},
        {"Pauli-Z", {1, 0, 0.5, [](P) { return pauli_z(); }}},
        {"S", {1, 0, 0.5, [](P) { return m2(1, 0, 0, kI); }}},
        {"T", {1, 0, 0.5, [](P) { return phase(std::numbers::pi / 4); }}},
        {"T-adjoint", {1, 0, 0.5, [](P) { return phase(-std::numbers::pi / 4); }}},
        {"Phase", {1, 1, 0.5, [](P p) { return phase(p[0]); }}},
        {"RZ", {1, 1, 0.5, [](P p) { return rz(p[0]); }}},
        {"U1", {1, 1, 0.5, [](P p) { return phase(p[0]); }}},
        // [8,8] / 87.5%
        {"CCX", {3, 0, 0.875, [](P) { return ccx(); }}},
        {"CSwap", {3, 0, 0.875, [](P) { return cswap(); }}},
        // [4,4] / 50%
        {"RXX", {2, 1, 0.5, [](P p) { return rxx(p[0]); }}},
        {"RYY", {2, 1, 0.5, [](P p) { return ryy(p[0]); }}},
        {"RZX", {2, 1, 0.5, [](P p) { return rzx(p[0]); }}},
        {"ECR", {2, 0, 0.5, [](P) { return ecr(); }}},
        // [4,4] / 62.5%
        {"CH", {2, 0, 0.625, [](P) { return controlled(hadamard()); }}},
        {"CSX", {2, 0, 0.625, [](P) { return controlled(sx()); }}},
        {"CU", {2, 4, 0.625, [](P p) {
             DenseMatrix u = ugate(p[0], p[1], p[2]);
             for (cplx& v : u.data) v *= expi(p[3]);
             return controlled(u);
         }}},
        {"CU3", {2, 3, 0.625, [](P p) { return controlled(ugate(p[0], p[1], p[2])); }}},
        // [4,4] / 75%
        {"RZZ", {2, 1, 0.75, [](P p) { return rzz(p[0]); }}},
        {"Swap", {2, 0, 0.75, [](P) { return swap_gate(); }}},
        {"iSwap", {2, 0, 0.75, [](P) { return iswap_gate(); }}},
        {"Controlled-X", {2, 0, 0.75, [](P) { return controlled(pauli_x()); }}},
        {"Controlled-Y", {2, 0, 0.75, [](P) { return controlled(pauli_y()); }}},
        {"Controlled-Z", {2, 0, 0.75, [](P) { return controlled(pauli_z()); }}},
        {"DCX", {2, 0, 0.75, [](P) { return dcx(); }}},
        {"CPhase", {2, 1, 0.75, [](P p) { return controlled(phase(p[0])); }}},
        {"CRZ", {2, 1, 0.75, [](P p) { return controlled(rz(p[0])); }}},
        {"CU1", {2, 1, 0.75, [](P p) { return controlled(phase(p[0])); }}},
    };
    return t;
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> a = {
        {"H", "Hadamard"},       {"I", "Identity"},  {"X", "Pauli-X"},
        {"Y", "Pauli-Y"},        {"Z", "Pauli-Z"},   {"Tdg", "T-adjoint"},
        {"P", "Phase"},          {"CX", "Controlled-X"}, {"CNOT", "Controlled-X"},
        {"CY", "Controlled-Y"},  {"CZ", "Controlled-Z"}, {"SWAP", "Swap"},
        {"Toffoli", "CCX"},      {"Fredkin", "CSwap"},
        {"square root of Pauli-X", "SX"},
    };
    return a;
}

std::string resolve(const std::string& name) {
    auto it = aliases().find(name);
    return it == aliases().end() ? name : it->second;
}

// Generic angles; none of these hit incidental zeros of sin/cos.
const std::vector<double> kCanonicalAngles = {1.1, 0.7, 0.3, 0.9};

}  // namespace

const std::vector<GateInfo>& gate_catalog() {
    static const std::vector<GateInfo> list = [] {
        // Listing order follows the gate table by ratio class.
        const std::vector<std::string> order = {
            "Hadamard", "SX", "SXdg", "R", "RX", "RY", "U", "U2",
            "Identity", "Pauli-X", "Pauli-Y", "Pauli-Z", "S", "T", "T-adjoint",
            "Phase", "RZ", "U1",
            "CCX", "CSwap",
            "RXX", "RYY", "RZX", "ECR",
            "CH", "CSX", "CU", "CU3",
            "RZZ", "Swap", "iSwap", "Controlled-X", "Controlled-Y",
            "Controlled-Z", "DCX", "CPhase", "CRZ", "CU1",
        };
        std::vector<GateInfo> v;
        for (const std::string& name : order) {
            const Entry& e = table().at(name);
            v.push_back({name, e.arity, e.param_count, e.ratio});
        }
        return v;
    }();
    return list;
}

bool gate_known(const std::string& name) { return table().count(resolve(name)) != 0; }

std::vector<double> canonical_params(const std::string& name) {
    auto it = table().find(resolve(name));
    if (it == table().end()) throw SimError("unknown gate: " + name);
    return {kCanonicalAngles.begin(), kCanonicalAngles.begin() + it->second.param_count};
}

GateSpec gate_catalog_lookup(const std::string& name, const std::vector<double>& params) {
    const std::string key = resolve(name);
    auto it = table().find(key);
    if (it == table().end()) throw SimError("unknown gate: " + name);
    const Entry& e = it->second;
    if (int(params.size()) != e.param_count)
        throw SimError("gate " + key + " takes " + std::to_string(e.param_count) +
                       " parameter(s), got " + std::to_string(params.size()));
    GateSpec g;
    g.name = key;
    g.arity = e.arity;
    g.params = params;
    g.matrix = e.build(params);
    g.declared_zero_ratio = e.ratio;
    return g;
}

}  // namespace qcsim
