// rotation.hpp
// Two-level U(2) rotations acting on a pair of qudit levels, and rotation
// programs: ordered layers of rotations meant to run in parallel.
//
// A rotation acts as exp(-i θ (σ·n̂) / 2) on the span of its level pair
// (lower level = first basis vector) and as identity on every other level.
// Angles are quantized to integer multiples of π/4 so that programs are
// exactly representable; the half-angle trigonometry is looked up from a
// table that is exact at multiples of π/4.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "quditc/matrix.hpp"
#include "quditc/system.hpp"

namespace quditc {

enum class Axis { X, Y, Z };

inline char axis_name(Axis a) {
    switch (a) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    throw std::logic_error("axis_name: bad axis");
}

struct Rotation {
    Axis axis;
    int angle_eighths;  // θ = angle_eighths · π/4
    int lower;          // level j
    int upper;          // level k, j < k

    Rotation(Axis ax, int eighths, int j, int k)
        : axis(ax), angle_eighths(eighths), lower(j), upper(k) {
        if (j < 0 || j >= k) throw std::domain_error("Rotation: need 0 <= j < k");
    }

    bool operator==(const Rotation&) const = default;
};

namespace detail {

// cos/sin of k·π/8 with exact doubles at the multiples of π/4, so that e.g.
// R(2π) is exactly -I on its subspace and H blocks are exactly ±1/√2.
inline double cos_eighth_pi(int k) {
    static const double c8 = std::cos(std::numbers::pi / 8.0);
    static const double s8 = std::sin(std::numbers::pi / 8.0);
    constexpr double r2 = std::numbers::sqrt2 / 2.0;
    switch (((k % 16) + 16) % 16) {
        case 0: return 1.0;
        case 1: return c8;
        case 2: return r2;
        case 3: return s8;
        case 4: return 0.0;
        case 5: return -s8;
        case 6: return -r2;
        case 7: return -c8;
        case 8: return -1.0;
        case 9: return -c8;
        case 10: return -r2;
        case 11: return -s8;
        case 12: return 0.0;
        case 13: return s8;
        case 14: return r2;
        case 15: return c8;
    }
    return 0.0;
}

inline double sin_eighth_pi(int k) {
    return cos_eighth_pi(k - 4);
}

}  // namespace detail

// The 2×2 block exp(-i θ (σ·n̂) / 2), row-major {m00, m01, m10, m11}.
inline std::array<cdouble, 4> rotation_block(Axis axis, int angle_eighths) {
    // half angle θ/2 = angle_eighths · π/8
    const double c = detail::cos_eighth_pi(angle_eighths);
    const double s = detail::sin_eighth_pi(angle_eighths);
    switch (axis) {
        case Axis::X: return {cdouble{c, 0}, cdouble{0, -s}, cdouble{0, -s}, cdouble{c, 0}};
        case Axis::Y: return {cdouble{c, 0}, cdouble{-s, 0}, cdouble{s, 0}, cdouble{c, 0}};
        case Axis::Z: return {cdouble{c, -s}, cdouble{}, cdouble{}, cdouble{c, s}};
    }
    throw std::logic_error("rotation_block: bad axis");
}

inline void check_rotation_levels(const Rotation& r, const SystemShape& shape) {
    if (r.upper > shape.d)
        throw std::domain_error("Rotation: level " + std::to_string(r.upper) +
                                " out of range for D = " + std::to_string(shape.d));
}

// Full (D+1)×(D+1) matrix: the block on (lower, upper), identity elsewhere.
inline CMatrix rotation_matrix(const Rotation& r, const SystemShape& shape) {
    check_rotation_levels(r, shape);
    const auto block = rotation_block(r.axis, r.angle_eighths);
    auto m = CMatrix::identity(static_cast<std::size_t>(shape.total_levels()));
    const auto j = static_cast<std::size_t>(r.lower);
    const auto k = static_cast<std::size_t>(r.upper);
    m(j, j) = block[0];
    m(j, k) = block[1];
    m(k, j) = block[2];
    m(k, k) = block[3];
    return m;
}

// One gate's worth of layers inside a program, for per-gate depth accounting.
struct GateSegment {
    std::string label;
    std::size_t layer_count = 0;

    bool operator==(const GateSegment&) const = default;
};

struct RotationProgram {
    SystemShape shape;
    std::vector<std::vector<Rotation>> layers;
    std::vector<GateSegment> segments;  // optional; empty when boundaries are unknown

    explicit RotationProgram(SystemShape s) : shape(s) {}

    std::size_t depth() const { return layers.size(); }

    std::size_t rotation_count() const {
        std::size_t count = 0;
        for (const auto& layer : layers) count += layer.size();
        return count;
    }
};

// Human-readable form like "R_y(-pi/2)" or "R_x(2pi)".
inline std::string rotation_angle_text(int angle_eighths) {
    const int num = angle_eighths;
    std::string s;
    if (num % 8 == 0) {
        const int turns = num / 8;
        if (turns == 1) s = "2pi";
        else if (turns == -1) s = "-2pi";
        else if (turns == 0) s = "0";
        else s = std::to_string(2 * turns) + "pi";
    } else if (num % 4 == 0) {
        const int halves = num / 4;
        s = (halves == 1) ? "pi" : (halves == -1) ? "-pi" : std::to_string(halves) + "pi";
    } else if (num % 2 == 0) {
        const int quarters = num / 2;
        s = (quarters == 1) ? "pi/2" : (quarters == -1) ? "-pi/2" : std::to_string(quarters) + "pi/2";
    } else {
        s = (num == 1) ? "pi/4" : (num == -1) ? "-pi/4" : std::to_string(num) + "pi/4";
    }
    return s;
}

inline std::string to_string(const Rotation& r) {
    std::string out = "R_";
    out += axis_name(r.axis);
    out += "(" + rotation_angle_text(r.angle_eighths) + ")";
    out += "(" + std::to_string(r.lower) + "," + std::to_string(r.upper) + ")";
    return out;
}

}  // namespace quditc
