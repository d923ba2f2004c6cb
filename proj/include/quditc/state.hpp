// state.hpp
// Exact dense statevector simulation of rotation programs on one qudit.
// States are value types; operations return new states. apply_*_in_place
// variants mutate their argument and are what the pure wrappers call.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "quditc/matrix.hpp"
#include "quditc/rotation.hpp"
#include "quditc/system.hpp"

namespace quditc {

struct QuditState {
    SystemShape shape;
    std::vector<cdouble> amplitudes;  // length D+1; index D is the ancilla

    explicit QuditState(SystemShape s)
        : shape(s), amplitudes(static_cast<std::size_t>(s.total_levels())) {}

    QuditState(SystemShape s, std::vector<cdouble> amps) : shape(s), amplitudes(std::move(amps)) {
        if (amplitudes.size() != static_cast<std::size_t>(shape.total_levels()))
            throw std::invalid_argument("QuditState: amplitude vector has wrong length");
    }
};

inline QuditState ground_state(const SystemShape& shape) {
    QuditState state(shape);
    state.amplitudes[0] = 1.0;
    return state;
}

inline double norm(const QuditState& state) {
    double sum = 0.0;
    for (const auto& a : state.amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

inline void apply_rotation_in_place(QuditState& state, const Rotation& r) {
    check_rotation_levels(r, state.shape);
    const auto block = rotation_block(r.axis, r.angle_eighths);
    const auto j = static_cast<std::size_t>(r.lower);
    const auto k = static_cast<std::size_t>(r.upper);
    const cdouble aj = state.amplitudes[j];
    const cdouble ak = state.amplitudes[k];
    state.amplitudes[j] = block[0] * aj + block[1] * ak;
    state.amplitudes[k] = block[2] * aj + block[3] * ak;
}

inline QuditState apply_rotation(QuditState state, const Rotation& r) {
    apply_rotation_in_place(state, r);
    return state;
}

// Rotations of a validated layer commute, so order within the span does not
// change the result; they are applied in program order for reproducibility.
inline void apply_layer_in_place(QuditState& state, std::span<const Rotation> layer) {
    for (const auto& r : layer) apply_rotation_in_place(state, r);
}

inline QuditState apply_layer(QuditState state, std::span<const Rotation> layer) {
    apply_layer_in_place(state, layer);
    return state;
}

inline void apply_program_in_place(QuditState& state, const RotationProgram& program) {
    if (program.shape != state.shape)
        throw std::invalid_argument("apply_program: shape mismatch");
    for (const auto& layer : program.layers) apply_layer_in_place(state, layer);
}

inline QuditState apply_program(QuditState state, const RotationProgram& program) {
    apply_program_in_place(state, program);
    return state;
}

// Left-multiplies m by the rotation; touches only rows lower/upper.
inline void apply_rotation_to_matrix(CMatrix& m, const Rotation& r) {
    const auto block = rotation_block(r.axis, r.angle_eighths);
    const auto j = static_cast<std::size_t>(r.lower);
    const auto k = static_cast<std::size_t>(r.upper);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const cdouble mj = m(j, c);
        const cdouble mk = m(k, c);
        m(j, c) = block[0] * mj + block[1] * mk;
        m(k, c) = block[2] * mj + block[3] * mk;
    }
}

// Product of all rotations in program order, as a (D+1)×(D+1) matrix.
inline CMatrix program_unitary(const RotationProgram& program) {
    auto u = CMatrix::identity(static_cast<std::size_t>(program.shape.total_levels()));
    for (const auto& layer : program.layers)
        for (const auto& r : layer) {
            check_rotation_levels(r, program.shape);
            apply_rotation_to_matrix(u, r);
        }
    return u;
}

inline std::vector<double> probabilities(const QuditState& state) {
    std::vector<double> probs(state.amplitudes.size());
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i)
        probs[i] = std::norm(state.amplitudes[i]);
    return probs;
}

}  // namespace quditc
