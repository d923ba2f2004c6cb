// schedule.hpp
// Layer validation and depth accounting. Two rotations may share a layer only
// if they commute; commutation is decided exactly on the joint subspace of
// the involved levels (at most 4), which is the literal truth condition
// behind the shared-eigenvector rule.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quditc/matrix.hpp"
#include "quditc/rotation.hpp"
#include "quditc/system.hpp"

namespace quditc {

inline constexpr double kCommuteTol = 1e-12;

namespace detail {

// Embeds the rotation into the subspace spanned by `levels` (identity on
// levels the rotation does not touch).
inline CMatrix embed_on_levels(const Rotation& r, const std::vector<int>& levels) {
    auto m = CMatrix::identity(levels.size());
    const auto block = rotation_block(r.axis, r.angle_eighths);
    const auto pos = [&](int level) -> std::ptrdiff_t {
        const auto it = std::find(levels.begin(), levels.end(), level);
        return it == levels.end() ? -1 : (it - levels.begin());
    };
    const auto j = pos(r.lower);
    const auto k = pos(r.upper);
    if (j < 0 || k < 0) throw std::logic_error("embed_on_levels: level missing");
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = block[0];
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = block[1];
    m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = block[2];
    m(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = block[3];
    return m;
}

}  // namespace detail

inline bool commutes(const Rotation& a, const Rotation& b, const SystemShape& shape) {
    check_rotation_levels(a, shape);
    check_rotation_levels(b, shape);
    // Disjoint level pairs always commute.
    if (a.lower != b.lower && a.lower != b.upper && a.upper != b.lower && a.upper != b.upper)
        return true;
    std::vector<int> levels{a.lower, a.upper, b.lower, b.upper};
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const CMatrix ma = detail::embed_on_levels(a, levels);
    const CMatrix mb = detail::embed_on_levels(b, levels);
    return max_abs_diff(ma * mb, mb * ma) < kCommuteTol;
}

struct ValidationResult {
    bool ok = true;
    std::size_t layer_index = 0;           // first offending layer
    std::optional<Rotation> first, second;  // first offending pair
    std::string message;

    explicit operator bool() const { return ok; }
};

inline ValidationResult validate_program(const RotationProgram& program) {
    for (std::size_t li = 0; li < program.layers.size(); ++li) {
        const auto& layer = program.layers[li];
        for (std::size_t i = 0; i < layer.size(); ++i)
            for (std::size_t j = i + 1; j < layer.size(); ++j)
                if (!commutes(layer[i], layer[j], program.shape)) {
                    ValidationResult bad;
                    bad.ok = false;
                    bad.layer_index = li;
                    bad.first = layer[i];
                    bad.second = layer[j];
                    bad.message = "layer " + std::to_string(li) + ": " + to_string(layer[i]) +
                                  " does not commute with " + to_string(layer[j]);
                    return bad;
                }
    }
    return {};
}

struct GateMetrics {
    std::string label;
    std::size_t rotation_count = 0;
    std::size_t depth = 0;
};

struct DepthMetrics {
    std::size_t rotation_count = 0;
    std::size_t depth = 0;
    std::vector<GateMetrics> per_gate;
};

inline DepthMetrics metrics(const RotationProgram& program) {
    DepthMetrics out;
    out.rotation_count = program.rotation_count();
    out.depth = program.depth();
    std::size_t layer = 0;
    for (const auto& seg : program.segments) {
        GateMetrics gm;
        gm.label = seg.label;
        gm.depth = seg.layer_count;
        for (std::size_t i = 0; i < seg.layer_count && layer + i < program.layers.size(); ++i)
            gm.rotation_count += program.layers[layer + i].size();
        layer += seg.layer_count;
        out.per_gate.push_back(std::move(gm));
    }
    return out;
}

// Circuit = gate sequence: layers concatenate, depths add. No cross-gate
// merging here; that is what the depth formulas count.
inline RotationProgram concat(const std::vector<RotationProgram>& programs) {
    if (programs.empty()) throw std::invalid_argument("concat: empty program list");
    RotationProgram out(programs.front().shape);
    for (const auto& p : programs) {
        if (p.shape != out.shape) throw std::invalid_argument("concat: shape mismatch");
        out.layers.insert(out.layers.end(), p.layers.begin(), p.layers.end());
        out.segments.insert(out.segments.end(), p.segments.begin(), p.segments.end());
    }
    return out;
}

// Greedily folds each layer into the previous one when every cross pair
// commutes. Gate boundaries are dissolved, so segments are dropped.
inline RotationProgram merge_adjacent(const RotationProgram& program) {
    RotationProgram out(program.shape);
    for (const auto& layer : program.layers) {
        if (layer.empty()) continue;
        bool can_merge = !out.layers.empty();
        if (can_merge)
            for (const auto& prev : out.layers.back()) {
                for (const auto& next : layer)
                    if (!commutes(prev, next, program.shape)) {
                        can_merge = false;
                        break;
                    }
                if (!can_merge) break;
            }
        if (can_merge)
            out.layers.back().insert(out.layers.back().end(), layer.begin(), layer.end());
        else
            out.layers.push_back(layer);
    }
    return out;
}

}  // namespace quditc
