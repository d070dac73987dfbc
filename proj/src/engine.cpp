#include "qcsim/engine.hpp"

#include <map>

#include "qcsim/sparsity.hpp"

namespace qcsim {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::dense: return "dense";
        case Engine::dax: return "dax";
        case Engine::das: return "das";
        case Engine::rh_dax: return "rh-dax";
    }
    return "?";
}

Engine engine_from_name(const std::string& name) {
    if (name == "dense") return Engine::dense;
    if (name == "dax") return Engine::dax;
    if (name == "das") return Engine::das;
    if (name == "rh-dax" || name == "rh_dax") return Engine::rh_dax;
    throw ParseError("unknown engine: " + name);
}

namespace {

// Per-qubit-position factors of Eq-style step construction: the placed
// gate matrix at its first qubit, 2x2 identities elsewhere.
std::vector<const DenseMatrix*> step_factors(const CircuitStep& step, int n,
                                             const DenseMatrix& id2) {
    std::map<int, const DenseMatrix*> placed;
    std::map<int, int> span;
    for (const Placement& p : step.placements) {
        placed[p.first_qubit] = &p.gate.matrix;
        span[p.first_qubit] = p.gate.arity;
    }
    std::vector<const DenseMatrix*> factors;
    int q = 0;
    while (q < n) {
        auto it = placed.find(q);
        if (it != placed.end()) {
            factors.push_back(it->second);
            q += span[q];
        } else {
            factors.push_back(&id2);
            q += 1;
        }
    }
    return factors;
}

DenseMatrix diag_dense(const DiagSign& d, int n) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    if (dim > dense_cap() / dim) throw CapacityError("diagonal step exceeds dense cap");
    DenseMatrix m(dim, dim);
    for (std::uint64_t i = 0; i < dim; ++i) m.at(i, i) = d.negated(i) ? -1.0 : 1.0;
    return m;
}

DaxMatrix diag_dax(const DiagSign& d, int n) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    DaxMatrix m;
    m.rows = m.cols = dim;
    m.entries.reserve(dim);
    for (std::uint64_t i = 0; i < dim; ++i)
        m.entries.push_back({i, i, d.negated(i) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0}});
    return m;
}

DasMatrix diag_das(const DiagSign& d, int n) {
    const std::uint64_t dim = std::uint64_t(1) << n;
    DasMatrix m;
    m.rows = m.cols = dim;
    m.entries.reserve(dim);
    for (std::uint64_t i = 0; i < dim; ++i)
        m.entries.push_back({i, true, d.negated(i) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0}});
    return m;
}

std::uint64_t dense_step_bytes(int n) {
    if (2 * n + 4 >= 64) return UINT64_MAX;
    return std::uint64_t(1) << (2 * n + 4);
}

// Analytic nonzero count of a step matrix: product of factor counts for
// gate steps (exact for structural zeros), 2^n for diagonal steps.
std::uint64_t step_nnz(const CircuitStep& step, int n) {
    if (step.kind == CircuitStep::Kind::diag) return std::uint64_t(1) << n;
    static const DenseMatrix id2 = DenseMatrix::identity(2);
    std::uint64_t nnz = 1;
    for (const DenseMatrix* f : step_factors(step, n, id2)) nnz *= nonzero_count(*f);
    return nnz;
}

bool same_spec(const GateSpec& a, const GateSpec& b) {
    return a.name == b.name && a.arity == b.arity && a.params == b.params && a.matrix == b.matrix;
}

// Structural equality of steps, used to reuse an already-built step
// matrix: circuits such as Grover repeat the same few steps many times.
bool same_step(const CircuitStep& a, const CircuitStep& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == CircuitStep::Kind::diag)
        return a.diag.flipped == b.diag.flipped && a.diag.flip_rest == b.diag.flip_rest;
    if (a.placements.size() != b.placements.size()) return false;
    for (std::size_t i = 0; i < a.placements.size(); ++i) {
        if (a.placements[i].first_qubit != b.placements[i].first_qubit) return false;
        if (!same_spec(a.placements[i].gate, b.placements[i].gate)) return false;
    }
    return true;
}

template <class M, class Build>
const M& cached_step_matrix(std::vector<std::pair<const CircuitStep*, M>>& cache,
                            const CircuitStep& step, Build&& build) {
    for (const auto& [s, m] : cache)
        if (same_step(*s, step)) return m;
    cache.emplace_back(&step, build());
    return cache.back().second;
}

}  // namespace

DenseMatrix step_matrix_dense(const CircuitStep& step, int n) {
    if (step.kind == CircuitStep::Kind::diag) return diag_dense(step.diag, n);
    static const DenseMatrix id2 = DenseMatrix::identity(2);
    const auto factors = step_factors(step, n, id2);
    DenseMatrix acc = *factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = dense_tensor(acc, *factors[i]);
    return acc;
}

DaxMatrix step_matrix_dax(const CircuitStep& step, int n) {
    if (step.kind == CircuitStep::Kind::diag) return diag_dax(step.diag, n);
    static const DenseMatrix id2 = DenseMatrix::identity(2);
    const auto factors = step_factors(step, n, id2);
    DaxMatrix acc = dax_encode(*factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) acc = dax_mtp(acc, dax_encode(*factors[i]));
    return acc;
}

DasMatrix step_matrix_das(const CircuitStep& step, int n) {
    if (step.kind == CircuitStep::Kind::diag) return diag_das(step.diag, n);
    static const DenseMatrix id2 = DenseMatrix::identity(2);
    const auto factors = step_factors(step, n, id2);
    DasMatrix acc = das_encode(*factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) acc = das_mtp(acc, das_encode(*factors[i]));
    return acc;
}

SimReport simulate(const Circuit& c, Engine engine, const SimOptions& opts) {
    c.validate();
    SimReport report;
    StateVector state(c.n, c.initial);

    std::vector<std::pair<const CircuitStep*, DenseMatrix>> dense_cache;
    std::vector<std::pair<const CircuitStep*, DaxMatrix>> dax_cache;
    std::vector<std::pair<const CircuitStep*, DasMatrix>> das_cache;

    for (const CircuitStep& step : c.steps) {
        StepReport sr;
        sr.stage = step.stage;
        sr.dense_bytes = dense_step_bytes(c.n);

        const bool use_rh = engine == Engine::rh_dax && step.is_hadamard_all(c.n);
        if (use_rh) {
            const RhMatrix rh = rh_build(c.n);
            RhMvmStats stats;
            state = rh_mvm(rh, state, opts.sign_method, &stats, opts.block_size);
            sr.structure = "rh";
            sr.matrix_bytes = 16;  // the magnitude plus the qubit count
            sr.sign_count = stats.sign_count;
            sr.madd_count = stats.madd_count;
        } else if (engine == Engine::dense) {
            const DenseMatrix& m = cached_step_matrix(dense_cache, step,
                                                      [&] { return step_matrix_dense(step, c.n); });
            state = dense_mvm(m, state);
            sr.structure = "dense";
            sr.entry_count = nonzero_count(m);
            sr.matrix_bytes = m.data.size() * kDenseElementBytes;
            sr.madd_count = m.rows * m.cols;
        } else if (engine == Engine::das) {
            const DasMatrix& m = cached_step_matrix(das_cache, step,
                                                    [&] { return step_matrix_das(step, c.n); });
            state = das_mvm(m, state);
            sr.structure = "das";
            sr.entry_count = m.entries.size();
            sr.matrix_bytes = das_memory_bytes(m);
            sr.madd_count = m.entries.size();
        } else {
            const DaxMatrix& m = cached_step_matrix(dax_cache, step,
                                                    [&] { return step_matrix_dax(step, c.n); });
            state = dax_mvm(m, state);
            sr.structure = "dax";
            sr.entry_count = m.entries.size();
            sr.matrix_bytes = dax_memory_bytes(m);
            sr.madd_count = m.entries.size();
        }

        report.total_sign_count += sr.sign_count;
        report.total_madd_count += sr.madd_count;
        report.steps.push_back(std::move(sr));
    }

    report.probabilities = state.probabilities();
    report.final = std::move(state);
    return report;
}

std::vector<StepReport> memory_report(const Circuit& c, Engine engine) {
    c.validate();
    std::vector<StepReport> out;
    for (const CircuitStep& step : c.steps) {
        StepReport sr;
        sr.stage = step.stage;
        sr.dense_bytes = dense_step_bytes(c.n);
        if (engine == Engine::rh_dax && step.is_hadamard_all(c.n)) {
            sr.structure = "rh";
            sr.matrix_bytes = 16;
        } else if (engine == Engine::dense) {
            sr.structure = "dense";
            sr.matrix_bytes = sr.dense_bytes;
            sr.entry_count = step_nnz(step, c.n);
        } else {
            sr.structure = engine == Engine::das ? "das" : "dax";
            sr.entry_count = step_nnz(step, c.n);
            sr.matrix_bytes = sr.entry_count * kEntryBytes;
        }
        out.push_back(sr);
    }
    return out;
}

}  // namespace qcsim
