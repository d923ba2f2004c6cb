// synth.hpp
// The compiler core: translates qubit-semantics gate specs into rotation
// programs with the closed-form rotation counts and depths.
//
// Angle calibration, fixed once against the qubit reference matrices:
//  * Hadamard pair rotations use R_y(-pi/2); the levels addressed an odd
//    number of times are left carrying a -1, cleared by one 2pi layer.
//  * NOT/CNOT pair rotations use R_y(-pi), which parks the leftover -1 on
//    the upper (flipped-to) levels, cleared the same way.
//  * T pairs each q_t = 1 level with the ancilla via R_z(-pi/2), phasing the
//    computational level by exactly e^{+i pi/4}.
// Under exp(-i θ σ·n̂ / 2) these signs reproduce the reference gates exactly,
// with no global phase.

#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quditc/gate_spec.hpp"
#include "quditc/rotation.hpp"
#include "quditc/system.hpp"

namespace quditc {

inline constexpr int kHadamardPairEighths = -2;  // R_y(-pi/2)
inline constexpr int kFlipPairEighths = -4;      // R_y(-pi)
inline constexpr int kFullTurnEighths = 8;       // R(2pi) = -I on its pair
inline constexpr int kTAncillaEighths = -2;      // R_z(-pi/2)

struct SynthesisRecord {
    GateSpec spec;
    RotationProgram program;
    std::vector<std::vector<std::pair<int, int>>> pairings;  // (l, u) per layer
    bool uses_ancilla = false;

    std::size_t rotation_count() const { return program.rotation_count(); }
    std::size_t depth() const { return program.depth(); }
};

namespace detail {

template <typename Pred>
std::vector<int> levels_where(const SystemShape& shape, Pred&& pred) {
    std::vector<int> out;
    for (int d = 0; d < shape.d; ++d)
        if (pred(d)) out.push_back(d);
    return out;
}

// Appends one layer of 2pi rotations imposing a -1 phase on every level in
// `phased` (ascending): adjacent levels are paired; a single leftover level
// is paired with the ancilla instead.
inline void append_phase_layer(SynthesisRecord& rec, Axis axis, const std::vector<int>& phased) {
    std::vector<Rotation> layer;
    std::vector<std::pair<int, int>> pairs;
    if (phased.size() == 1) {
        const int anc = rec.program.shape.ancilla();
        layer.emplace_back(axis, kFullTurnEighths, phased.front(), anc);
        pairs.emplace_back(phased.front(), anc);
        rec.uses_ancilla = true;
    } else {
        if (phased.size() % 2 != 0)
            throw std::logic_error("phase layer: odd number of phased levels");
        for (std::size_t i = 0; i + 1 < phased.size(); i += 2) {
            layer.emplace_back(axis, kFullTurnEighths, phased[i], phased[i + 1]);
            pairs.emplace_back(phased[i], phased[i + 1]);
        }
    }
    rec.program.layers.push_back(std::move(layer));
    rec.pairings.push_back(std::move(pairs));
}

inline void finish(SynthesisRecord& rec) {
    rec.program.segments.push_back({gate_label(rec.spec), rec.program.layers.size()});
}

}  // namespace detail

// H on every qubit in `targets` at once: one R_y(-pi/2) layer of D/2 pair
// rotations per target, then a single phase layer on the D/2 levels whose
// target bits have odd popcount. Count D(2M+1)/4, depth M+1 (for N >= 2).
inline SynthesisRecord synth_hadamard(const std::set<int>& targets, const SystemShape& shape) {
    GateSpec spec = HadamardGate{targets};
    validate_spec(spec, shape);
    SynthesisRecord rec{spec, RotationProgram(shape), {}, false};
    for (int t : targets) {
        std::vector<Rotation> layer;
        std::vector<std::pair<int, int>> pairs;
        for (int l = 0; l < shape.d; ++l) {
            if (qubit_bit(l, t, shape.n)) continue;
            const int u = l | (1 << (shape.n - t));
            layer.emplace_back(Axis::Y, kHadamardPairEighths, l, u);
            pairs.emplace_back(l, u);
        }
        rec.program.layers.push_back(std::move(layer));
        rec.pairings.push_back(std::move(pairs));
    }
    const auto phased = detail::levels_where(shape, [&](int d) {
        int hits = 0;
        for (int t : targets) hits += qubit_bit(d, t, shape.n) ? 1 : 0;
        return hits % 2 == 1;
    });
    detail::append_phase_layer(rec, Axis::X, phased);
    detail::finish(rec);
    return rec;
}

// X on every qubit in `targets`: levels pair with their image under flipping
// all target bits. Count 3D/4, depth 2, independent of |targets| (N >= 2).
inline SynthesisRecord synth_not(const std::set<int>& targets, const SystemShape& shape) {
    GateSpec spec = NotGate{targets};
    validate_spec(spec, shape);
    SynthesisRecord rec{spec, RotationProgram(shape), {}, false};
    const int t_low = *targets.begin();
    int flip_mask = 0;
    for (int t : targets) flip_mask |= 1 << (shape.n - t);
    std::vector<Rotation> layer;
    std::vector<std::pair<int, int>> pairs;
    for (int d = 0; d < shape.d; ++d) {
        if (qubit_bit(d, t_low, shape.n)) continue;  // enumerate each pair from its lower member
        const int image = d ^ flip_mask;
        layer.emplace_back(Axis::Y, kFlipPairEighths, d, image);
        pairs.emplace_back(d, image);
    }
    rec.program.layers.push_back(std::move(layer));
    rec.pairings.push_back(std::move(pairs));
    const auto phased =
        detail::levels_where(shape, [&](int d) { return qubit_bit(d, t_low, shape.n); });
    detail::append_phase_layer(rec, Axis::X, phased);
    detail::finish(rec);
    return rec;
}

// T phases the D/2 levels with q_target = 1 by e^{i pi/4}. The default form
// pairs each of them with the ancilla; the ancilla-free form chains z
// rotations through the phased levels in rings of eight. Count D/2, depth 1.
inline SynthesisRecord synth_t(int target, const SystemShape& shape, bool use_ancilla = true) {
    GateSpec spec = TGate{target};
    validate_spec(spec, shape);
    SynthesisRecord rec{spec, RotationProgram(shape), {}, false};
    const auto phased =
        detail::levels_where(shape, [&](int d) { return qubit_bit(d, target, shape.n); });
    std::vector<Rotation> layer;
    std::vector<std::pair<int, int>> pairs;
    if (use_ancilla) {
        for (int a : phased) {
            layer.emplace_back(Axis::Z, kTAncillaEighths, a, shape.ancilla());
            pairs.emplace_back(a, shape.ancilla());
        }
        rec.uses_ancilla = true;
    } else {
        // Every two-level rotation has unit determinant, so a program that
        // never touches the ancilla can phase each of the D/2 levels by
        // e^{i pi/4} only when D is a multiple of 16.
        if (shape.d % 16 != 0)
            throw std::domain_error(
                "T without ancilla is only exact for D divisible by 16; use the ancilla form");
        for (std::size_t g = 0; g < phased.size(); g += 8) {
            for (int i = 0; i < 7; ++i) {
                layer.emplace_back(Axis::Z, -(2 * i + 1), phased[g + i], phased[g + i + 1]);
                pairs.emplace_back(phased[g + i], phased[g + i + 1]);
            }
            layer.emplace_back(Axis::Z, -1, phased[g], phased[g + 7]);
            pairs.emplace_back(phased[g], phased[g + 7]);
        }
    }
    rec.program.layers.push_back(std::move(layer));
    rec.pairings.push_back(std::move(pairs));
    detail::finish(rec);
    return rec;
}

// Multiply-controlled NOT: pairs differ in the target bit, with every control
// bit set and spectators identical. Count 3·2^(N-C-1)/2 for N-C >= 2; the
// all-qubit case falls back to a single ancilla phase pair. Depth 2 always.
inline SynthesisRecord synth_cnot(const std::set<int>& controls, int target,
                                  const SystemShape& shape) {
    GateSpec spec = ControlledNotGate{controls, target};
    validate_spec(spec, shape);
    SynthesisRecord rec{spec, RotationProgram(shape), {}, false};
    const int tbit = 1 << (shape.n - target);
    const auto lowers = detail::levels_where(shape, [&](int d) {
        if (qubit_bit(d, target, shape.n)) return false;
        for (int c : controls)
            if (!qubit_bit(d, c, shape.n)) return false;
        return true;
    });
    std::vector<Rotation> layer;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> phased;
    for (int l : lowers) {
        layer.emplace_back(Axis::Y, kFlipPairEighths, l, l | tbit);
        pairs.emplace_back(l, l | tbit);
        phased.push_back(l | tbit);
    }
    rec.program.layers.push_back(std::move(layer));
    rec.pairings.push_back(std::move(pairs));
    detail::append_phase_layer(rec, Axis::X, phased);
    detail::finish(rec);
    return rec;
}

// Multiply-controlled Z: a -1 phase on the 2^(N-C-T) levels whose action
// qubits all read 1, realized purely with 2pi z rotations. Depth 1.
inline SynthesisRecord synth_mcz(const std::set<int>& controls, const std::set<int>& targets,
                                 const SystemShape& shape) {
    GateSpec spec = ControlledZGate{controls, targets};
    validate_spec(spec, shape);
    SynthesisRecord rec{spec, RotationProgram(shape), {}, false};
    const auto phased = detail::levels_where(shape, [&](int d) {
        for (int c : controls)
            if (!qubit_bit(d, c, shape.n)) return false;
        for (int t : targets)
            if (!qubit_bit(d, t, shape.n)) return false;
        return true;
    });
    detail::append_phase_layer(rec, Axis::Z, phased);
    detail::finish(rec);
    return rec;
}

inline SynthesisRecord synth_gate(const GateSpec& spec, const SystemShape& shape) {
    return std::visit(
        [&](const auto& g) -> SynthesisRecord {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, HadamardGate>) {
                return synth_hadamard(g.targets, shape);
            } else if constexpr (std::is_same_v<G, NotGate>) {
                return synth_not(g.targets, shape);
            } else if constexpr (std::is_same_v<G, TGate>) {
                return synth_t(g.target, shape);
            } else if constexpr (std::is_same_v<G, ControlledNotGate>) {
                return synth_cnot(g.controls, g.target, shape);
            } else {
                return synth_mcz(g.controls, g.targets, shape);
            }
        },
        spec);
}

}  // namespace quditc
