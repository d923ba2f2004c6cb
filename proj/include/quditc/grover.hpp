// grover.hpp
// Qudit Grover circuits: construction from the synthesized gate set,
// iteration selection, theoretical and simulated success measures, and the
// qudit-vs-qubit depth comparison table.
//
// The diffusion stage is realized literally as H..X..CZ..X..H, which equals
// -(2|s><s| - I); the extra global -1 per iteration is unobservable and the
// marked-level probability matches sin^2((2t+1)·asin(1/sqrt(D))) exactly.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "quditc/qubit_reference.hpp"
#include "quditc/schedule.hpp"
#include "quditc/state.hpp"
#include "quditc/synth.hpp"

namespace quditc {

struct GroverReport {
    int n = 0;
    int d = 0;
    int marked = 0;
    int iterations = 0;
    std::size_t qudit_depth = 0;
    std::size_t qudit_rotation_count = 0;
    long long qubit_depth_linear = 0;  // 0 when the linear model is undefined (n < 3)
    double theoretical_amplitude = 0.0;
    double theoretical_probability = 0.0;
    double simulated_probability = 0.0;
    double max_ancilla_leak = 0.0;  // largest |ancilla amplitude| at any gate boundary
};

inline double grover_angle(int n) {
    return std::asin(1.0 / std::sqrt(static_cast<double>(1 << n)));
}

// Smallest iteration count reaching the first accuracy maximum.
inline int optimal_iterations(int n) {
    if (n < 2) throw std::domain_error("optimal_iterations: needs N >= 2");
    const double theta = grover_angle(n);
    const long t = std::lround(std::numbers::pi / (4.0 * theta) - 0.5);
    return t < 1 ? 1 : static_cast<int>(t);
}

struct SuccessMeasure {
    double amplitude = 0.0;    // |sin((2t+1)·theta_g)|
    double probability = 0.0;  // its square
};

inline SuccessMeasure theoretical_success(int n, int t) {
    if (n < 2) throw std::domain_error("theoretical_success: needs N >= 2");
    if (t < 1) throw std::domain_error("theoretical_success: iterations must be >= 1");
    const double a = std::sin((2.0 * t + 1.0) * grover_angle(n));
    return {std::abs(a), a * a};
}

namespace detail {

inline RotationProgram stage_program(SynthesisRecord rec, const char* stage) {
    for (auto& seg : rec.program.segments) seg.label = std::string(stage) + ":" + seg.label;
    return std::move(rec.program);
}

}  // namespace detail

// H on all qubits, then t rounds of oracle + diffusion. The oracle is the
// all-qubit controlled-Z, wrapped in X gates on the zero bits of `marked`
// when the marked level is not D-1 (adding depth 4 per iteration).
inline RotationProgram build_grover(int n, int marked, int iterations) {
    const SystemShape shape(n);
    if (marked < 0 || marked >= shape.d)
        throw std::domain_error("build_grover: marked level out of range");
    if (iterations < 1) throw std::domain_error("build_grover: iterations must be >= 1");

    std::set<int> all_qubits;
    for (int q = 1; q <= n; ++q) all_qubits.insert(q);
    std::set<int> cz_controls = all_qubits;
    cz_controls.erase(n);
    const std::set<int> cz_targets{n};
    std::set<int> zero_bits;
    for (int q = 1; q <= n; ++q)
        if (!qubit_bit(marked, q, n)) zero_bits.insert(q);

    std::vector<RotationProgram> parts;
    parts.push_back(detail::stage_program(synth_hadamard(all_qubits, shape), "init"));
    for (int i = 0; i < iterations; ++i) {
        if (!zero_bits.empty())
            parts.push_back(detail::stage_program(synth_not(zero_bits, shape), "oracle"));
        parts.push_back(detail::stage_program(synth_mcz(cz_controls, cz_targets, shape), "oracle"));
        if (!zero_bits.empty())
            parts.push_back(detail::stage_program(synth_not(zero_bits, shape), "oracle"));
        parts.push_back(detail::stage_program(synth_hadamard(all_qubits, shape), "diffusion"));
        parts.push_back(detail::stage_program(synth_not(all_qubits, shape), "diffusion"));
        parts.push_back(
            detail::stage_program(synth_mcz(cz_controls, cz_targets, shape), "diffusion"));
        parts.push_back(detail::stage_program(synth_not(all_qubits, shape), "diffusion"));
        parts.push_back(detail::stage_program(synth_hadamard(all_qubits, shape), "diffusion"));
    }
    return concat(parts);
}

// Builds and simulates the circuit from the ground state, watching the
// ancilla amplitude at every gate boundary.
inline GroverReport run_grover(int n, int marked, std::optional<int> iterations = std::nullopt) {
    const int t = iterations.has_value() ? *iterations : optimal_iterations(n);
    const RotationProgram program = build_grover(n, marked, t);

    QuditState state = ground_state(program.shape);
    const auto anc = static_cast<std::size_t>(program.shape.ancilla());
    double leak = 0.0;
    std::size_t layer = 0;
    for (const auto& seg : program.segments) {
        for (std::size_t i = 0; i < seg.layer_count; ++i)
            apply_layer_in_place(state, program.layers[layer++]);
        leak = std::max(leak, std::abs(state.amplitudes[anc]));
    }
    for (; layer < program.layers.size(); ++layer)
        apply_layer_in_place(state, program.layers[layer]);

    GroverReport report;
    report.n = n;
    report.d = program.shape.d;
    report.marked = marked;
    report.iterations = t;
    report.qudit_depth = program.depth();
    report.qudit_rotation_count = program.rotation_count();
    report.qubit_depth_linear = n >= 3 ? qubit_grover_depth(n, t) : 0;
    const SuccessMeasure th = theoretical_success(n, t);
    report.theoretical_amplitude = th.amplitude;
    report.theoretical_probability = th.probability;
    report.simulated_probability = std::norm(state.amplitudes[static_cast<std::size_t>(marked)]);
    report.max_ancilla_leak = leak;
    return report;
}

// One row per N with auto-selected iterations and marked level D-1.
inline std::vector<GroverReport> comparison_table(int n_min, int n_max) {
    if (n_min < 2) throw std::domain_error("comparison_table: needs N >= 2");
    if (n_max < n_min) throw std::domain_error("comparison_table: empty range");
    std::vector<GroverReport> rows;
    for (int n = n_min; n <= n_max; ++n) rows.push_back(run_grover(n, (1 << n) - 1));
    return rows;
}

}  // namespace quditc
