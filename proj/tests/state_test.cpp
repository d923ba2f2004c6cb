// Dense statevector simulation: rotations, layers, programs and the program
// unitary, plus the norm / ancilla invariants.

#include <gtest/gtest.h>

#include <random>

#include "quditc/qubit_reference.hpp"
#include "quditc/schedule.hpp"
#include "quditc/state.hpp"
#include "quditc/synth.hpp"
#include "test_util.hpp"

using namespace quditc;
using quditc::testing::expect_state_near;
using quditc::testing::random_rotation;

namespace {

QuditState random_state(std::mt19937& rng, const SystemShape& shape, bool zero_ancilla = true) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    QuditState state(shape);
    for (int i = 0; i < shape.d; ++i) state.amplitudes[i] = cdouble{gauss(rng), gauss(rng)};
    if (!zero_ancilla) state.amplitudes[shape.d] = cdouble{gauss(rng), gauss(rng)};
    const double len = norm(state);
    for (auto& a : state.amplitudes) a /= len;
    return state;
}

}  // namespace

TEST(GroundState, OneHotAtZero) {
    for (int n : {1, 3}) {
        const QuditState state = ground_state(SystemShape(n));
        ASSERT_EQ(state.amplitudes.size(), static_cast<std::size_t>((1 << n) + 1));
        EXPECT_EQ(state.amplitudes[0], cdouble(1, 0));
        for (std::size_t i = 1; i < state.amplitudes.size(); ++i)
            EXPECT_EQ(state.amplitudes[i], cdouble(0, 0));
        EXPECT_DOUBLE_EQ(norm(state), 1.0);
    }
}

TEST(ApplyRotation, MinusHalfPiYOnGround) {
    const SystemShape shape(3);
    const QuditState out = apply_rotation(ground_state(shape), Rotation(Axis::Y, -2, 0, 4));
    const double r2 = std::numbers::sqrt2 / 2.0;
    std::vector<cdouble> expected(9);
    expected[0] = r2;
    expected[4] = -r2;
    expect_state_near(out, expected, 0.0);
}

TEST(ApplyRotation, FullTurnPhasesMarkedLevel) {
    const SystemShape shape(4);
    QuditState state(shape);
    state.amplitudes[15] = 1.0;
    const QuditState out = apply_rotation(std::move(state), Rotation(Axis::Z, 8, 15, 16));
    EXPECT_EQ(out.amplitudes[15], cdouble(-1, 0));
}

TEST(ApplyRotation, NoOpOnUninvolvedAmplitudes) {
    const SystemShape shape(3);
    std::mt19937 rng(7);
    QuditState state = random_state(rng, shape);
    state.amplitudes[2] = 0.0;
    state.amplitudes[5] = 0.0;
    const QuditState out = apply_rotation(state, Rotation(Axis::Y, -2, 2, 5));
    expect_state_near(out, state.amplitudes, 0.0);
}

TEST(ApplyRotation, OutOfRangeLevelRejected) {
    QuditState state = ground_state(SystemShape(2));
    EXPECT_THROW(apply_rotation_in_place(state, Rotation(Axis::X, 8, 0, 7)), std::domain_error);
}

TEST(ApplyLayer, OrderIndependentForCommutingLayer) {
    const SystemShape shape(3);
    std::vector<Rotation> layer{Rotation(Axis::Y, -2, 0, 4), Rotation(Axis::Y, -2, 1, 5),
                                Rotation(Axis::Y, -2, 2, 6), Rotation(Axis::Y, -2, 3, 7)};
    std::mt19937 rng(11);
    const QuditState input = random_state(rng, shape);
    const QuditState forward = apply_layer(input, layer);
    std::vector<Rotation> reversed(layer.rbegin(), layer.rend());
    const QuditState backward = apply_layer(input, reversed);
    for (std::size_t i = 0; i < forward.amplitudes.size(); ++i)
        EXPECT_LT(std::abs(forward.amplitudes[i] - backward.amplitudes[i]), 1e-12);
}

TEST(ApplyLayer, RandomPermutationsOfValidatedLayers) {
    std::mt19937 rng(37);
    for (int n : {3, 4}) {
        const SystemShape shape(n);
        for (const auto& rec : equivalence_sweep(shape)) {
            const QuditState input = random_state(rng, shape);
            for (const auto& layer : rec.program.layers) {
                const QuditState forward = apply_layer(input, layer);
                std::vector<Rotation> shuffled = layer;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                const QuditState permuted = apply_layer(input, shuffled);
                for (std::size_t i = 0; i < forward.amplitudes.size(); ++i)
                    ASSERT_LT(std::abs(forward.amplitudes[i] - permuted.amplitudes[i]), 1e-12)
                        << gate_label(rec.spec);
            }
        }
    }
}

TEST(ApplyLayer, EmptyLayerIsIdentity) {
    std::mt19937 rng(13);
    const QuditState input = random_state(rng, SystemShape(2));
    const QuditState out = apply_layer(input, std::vector<Rotation>{});
    expect_state_near(out, input.amplitudes, 0.0);
}

TEST(ApplyLayer, SingleRotationLayerEqualsApplyRotation) {
    std::mt19937 rng(17);
    const SystemShape shape(3);
    const QuditState input = random_state(rng, shape);
    const Rotation r = random_rotation(rng, shape);
    const QuditState via_layer = apply_layer(input, std::vector<Rotation>{r});
    const QuditState direct = apply_rotation(input, r);
    expect_state_near(via_layer, direct.amplitudes, 0.0);
}

TEST(ApplyProgram, HadamardTargetOneOnGround) {
    const SystemShape shape(3);
    const auto rec = synth_hadamard({1}, shape);
    const QuditState out = apply_program(ground_state(shape), rec.program);
    const double r2 = std::numbers::sqrt2 / 2.0;
    std::vector<cdouble> expected(9);
    expected[0] = r2;
    expected[4] = r2;
    expect_state_near(out, expected, 1e-15);
}

TEST(ApplyProgram, DoubleNotOnGround) {
    const SystemShape shape(3);
    const auto rec = synth_not({1, 2}, shape);
    const QuditState out = apply_program(ground_state(shape), rec.program);
    std::vector<cdouble> expected(9);
    expected[6] = 1.0;
    expect_state_near(out, expected, 1e-15);
}

TEST(ApplyProgram, EmptyProgramIsIdentity) {
    std::mt19937 rng(19);
    const SystemShape shape(2);
    const QuditState input = random_state(rng, shape);
    const QuditState out = apply_program(input, RotationProgram(shape));
    expect_state_near(out, input.amplitudes, 0.0);
}

TEST(ApplyProgram, ShapeMismatchRejected) {
    QuditState state = ground_state(SystemShape(2));
    EXPECT_THROW(apply_program_in_place(state, RotationProgram(SystemShape(3))),
                 std::invalid_argument);
}

TEST(ProgramUnitary, SingleFullTurn) {
    const SystemShape shape(2);
    RotationProgram p(shape);
    p.layers.push_back({Rotation(Axis::X, 8, 1, 3)});
    const CMatrix u = program_unitary(p);
    for (int i = 0; i < 5; ++i) {
        const cdouble expected = (i == 1 || i == 3) ? cdouble{-1, 0} : cdouble{1, 0};
        EXPECT_EQ(u(i, i), expected);
    }
}

TEST(ProgramUnitary, FullControlledZIsSingleMinusOne) {
    for (int n : {2, 3, 4}) {
        const SystemShape shape(n);
        std::set<int> controls;
        for (int q = 1; q < n; ++q) controls.insert(q);
        const auto rec = synth_mcz(controls, {n}, shape);
        const CMatrix u = program_unitary(rec.program);
        for (int d = 0; d < shape.d; ++d) {
            const cdouble expected = (d == shape.d - 1) ? cdouble{-1, 0} : cdouble{1, 0};
            EXPECT_EQ(u(d, d), expected) << "n=" << n << " level " << d;
        }
    }
}

TEST(ProgramUnitary, SynthesizedGatesAreUnitary) {
    for (int n = 1; n <= 4; ++n) {
        const SystemShape shape(n);
        for (const auto& rec : equivalence_sweep(shape))
            EXPECT_LT(unitarity_defect(program_unitary(rec.program)), 1e-10)
                << gate_label(rec.spec) << " n=" << n;
    }
}

TEST(ProgramUnitary, AgreesWithStateApplication) {
    std::mt19937 rng(23);
    const SystemShape shape(3);
    for (int trial = 0; trial < 20; ++trial) {
        RotationProgram p(shape);
        std::uniform_int_distribution<int> layer_count(1, 4);
        const int layers = layer_count(rng);
        for (int l = 0; l < layers; ++l) p.layers.push_back({random_rotation(rng, shape)});
        const QuditState input = random_state(rng, shape, /*zero_ancilla=*/false);
        const QuditState direct = apply_program(input, p);
        const CMatrix u = program_unitary(p);
        for (std::size_t i = 0; i < direct.amplitudes.size(); ++i) {
            cdouble via_matrix{};
            for (std::size_t j = 0; j < input.amplitudes.size(); ++j)
                via_matrix += u(i, j) * input.amplitudes[j];
            EXPECT_LT(std::abs(via_matrix - direct.amplitudes[i]), 1e-10);
        }
    }
}

TEST(Probabilities, PinnedValues) {
    const SystemShape shape(3);
    EXPECT_EQ(probabilities(ground_state(shape))[0], 1.0);

    const auto rec = synth_hadamard({1}, shape);
    const auto probs = probabilities(apply_program(ground_state(shape), rec.program));
    EXPECT_NEAR(probs[0], 0.5, 1e-15);
    EXPECT_NEAR(probs[4], 0.5, 1e-15);
    double total = 0.0;
    for (double p : probs) total += p;
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Invariants, NormPreservedAndAncillaSilentAcrossGates) {
    std::mt19937 rng(29);
    for (int n = 1; n <= 4; ++n) {
        const SystemShape shape(n);
        for (const auto& rec : equivalence_sweep(shape)) {
            QuditState state = random_state(rng, shape);
            apply_program_in_place(state, rec.program);
            EXPECT_NEAR(norm(state), 1.0, 1e-10);
            EXPECT_LT(std::abs(state.amplitudes[shape.d]), 1e-12)
                << gate_label(rec.spec) << " n=" << n;
        }
    }
}
