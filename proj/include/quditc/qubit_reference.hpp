// qubit_reference.hpp
// Ground truth for the compiler: exact 2^N x 2^N qubit-basis matrices built
// by tensor products (q_1 is the most significant factor), equivalence
// checking of synthesized programs against them, and the linear qubit-depth
// model for Grover circuits.

#pragma once

#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "quditc/gate_spec.hpp"
#include "quditc/matrix.hpp"
#include "quditc/state.hpp"
#include "quditc/synth.hpp"

namespace quditc {

inline constexpr double kEquivalenceTol = 1e-10;

namespace detail {

inline CMatrix qubit_factor_h() {
    CMatrix m(2, 2);
    constexpr double r2 = std::numbers::sqrt2 / 2.0;
    m(0, 0) = r2;
    m(0, 1) = r2;
    m(1, 0) = r2;
    m(1, 1) = -r2;
    return m;
}

inline CMatrix qubit_factor_x() {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

inline CMatrix qubit_factor_t() {
    CMatrix m(2, 2);
    constexpr double r2 = std::numbers::sqrt2 / 2.0;
    m(0, 0) = 1.0;
    m(1, 1) = cdouble{r2, r2};  // e^{i pi/4}
    return m;
}

inline CMatrix kron_over_qubits(int n, const std::set<int>& where, const CMatrix& factor) {
    CMatrix m = CMatrix::identity(1);
    const CMatrix eye = CMatrix::identity(2);
    for (int q = 1; q <= n; ++q) m = kron(m, where.count(q) ? factor : eye);
    return m;
}

}  // namespace detail

inline CMatrix qubit_gate_matrix(const GateSpec& spec, int n) {
    const SystemShape shape(n);
    validate_spec(spec, shape);
    return std::visit(
        [&](const auto& g) -> CMatrix {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, HadamardGate>) {
                return detail::kron_over_qubits(n, g.targets, detail::qubit_factor_h());
            } else if constexpr (std::is_same_v<G, NotGate>) {
                return detail::kron_over_qubits(n, g.targets, detail::qubit_factor_x());
            } else if constexpr (std::is_same_v<G, TGate>) {
                return detail::kron_over_qubits(n, {g.target}, detail::qubit_factor_t());
            } else if constexpr (std::is_same_v<G, ControlledNotGate>) {
                CMatrix m(static_cast<std::size_t>(shape.d), static_cast<std::size_t>(shape.d));
                for (int d = 0; d < shape.d; ++d) {
                    bool active = true;
                    for (int c : g.controls) active = active && qubit_bit(d, c, shape.n);
                    const int image = active ? pair_partner(d, g.target, shape) : d;
                    m(static_cast<std::size_t>(image), static_cast<std::size_t>(d)) = 1.0;
                }
                return m;
            } else {
                CMatrix m(static_cast<std::size_t>(shape.d), static_cast<std::size_t>(shape.d));
                for (int d = 0; d < shape.d; ++d) {
                    bool active = true;
                    for (int c : g.controls) active = active && qubit_bit(d, c, shape.n);
                    for (int t : g.targets) active = active && qubit_bit(d, t, shape.n);
                    m(static_cast<std::size_t>(d), static_cast<std::size_t>(d)) =
                        active ? -1.0 : 1.0;
                }
                return m;
            }
        },
        spec);
}

struct EquivalenceResult {
    bool equal = false;
    double max_abs_deviation = 0.0;   // entrywise, computational block, no phase freedom
    cdouble global_phase = 1.0;       // best unit q with q*U_qudit ~ U_qubit (diagnostic)
    double ancilla_coupling = 0.0;    // worst coupling of the ancilla row/column
};

// Compares the program unitary restricted to levels 0..D-1 against the qubit
// matrix, entrywise, and verifies the ancilla stays decoupled (its row and
// column vanish off the diagonal; the diagonal entry keeps unit magnitude).
inline EquivalenceResult check_equivalence(const SynthesisRecord& record) {
    const SystemShape shape = record.program.shape;
    const auto dim = static_cast<std::size_t>(shape.d);
    const CMatrix u = program_unitary(record.program);
    const CMatrix ref = qubit_gate_matrix(record.spec, shape.n);

    EquivalenceResult result;
    double best_mag = 0.0;
    cdouble best_ref = 1.0, best_u = 1.0;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            result.max_abs_deviation =
                std::max(result.max_abs_deviation, std::abs(u(r, c) - ref(r, c)));
            if (std::abs(ref(r, c)) > best_mag && std::abs(u(r, c)) > 1e-14) {
                best_mag = std::abs(ref(r, c));
                best_ref = ref(r, c);
                best_u = u(r, c);
            }
        }
    for (std::size_t i = 0; i < dim; ++i)
        result.ancilla_coupling =
            std::max({result.ancilla_coupling, std::abs(u(dim, i)), std::abs(u(i, dim))});
    result.ancilla_coupling =
        std::max(result.ancilla_coupling, std::abs(std::abs(u(dim, dim)) - 1.0));

    result.equal = result.max_abs_deviation < kEquivalenceTol &&
                   result.ancilla_coupling < kEquivalenceTol;
    if (!result.equal && best_mag > 0.0) {
        cdouble q = best_ref / best_u;
        const double mag = std::abs(q);
        if (mag > 0.0) result.global_phase = q / mag;
    }
    return result;
}

// Every gate spec the synthesizer accepts at this qubit count, synthesized,
// in a fixed enumeration order. Bit i of a mask selects qubit i+1. The
// ancilla-free T variant is included where it exists (D divisible by 16).
inline std::vector<SynthesisRecord> equivalence_sweep(const SystemShape& shape) {
    std::vector<SynthesisRecord> records;
    const int n = shape.n;
    const int full = (1 << n) - 1;
    const auto to_set = [n](int mask) {
        std::set<int> s;
        for (int q = 1; q <= n; ++q)
            if (mask & (1 << (q - 1))) s.insert(q);
        return s;
    };
    for (int mask = 1; mask <= full; ++mask) records.push_back(synth_hadamard(to_set(mask), shape));
    for (int mask = 1; mask <= full; ++mask) records.push_back(synth_not(to_set(mask), shape));
    for (int t = 1; t <= n; ++t) records.push_back(synth_t(t, shape));
    if (shape.d % 16 == 0)
        for (int t = 1; t <= n; ++t) records.push_back(synth_t(t, shape, false));
    for (int t = 1; t <= n; ++t) {
        const int others = full & ~(1 << (t - 1));
        for (int mask = others; mask; mask = (mask - 1) & others)
            records.push_back(synth_cnot(to_set(mask), t, shape));
    }
    for (int tmask = 1; tmask <= full; ++tmask) {
        const int others = full & ~tmask;
        for (int cmask = others;; cmask = (cmask - 1) & others) {
            records.push_back(synth_mcz(to_set(cmask), to_set(tmask), shape));
            if (cmask == 0) break;
        }
    }
    return records;
}

// Total Grover depth in the linear qubit-circuit model: t(16N - 34) + 2.
inline long long qubit_grover_depth(int n, int t) {
    if (n < 3) throw std::domain_error("qubit_grover_depth: linear model needs N >= 3");
    if (t < 1) throw std::domain_error("qubit_grover_depth: iterations must be >= 1");
    return static_cast<long long>(t) * (16LL * n - 34) + 2;
}

}  // namespace quditc
