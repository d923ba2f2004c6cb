// JSON wire formats, CSV rendering and float formatting.

#include <gtest/gtest.h>

#include <cstdlib>

#include "quditc/io.hpp"
#include "quditc/synth.hpp"
#include "test_util.hpp"

using namespace quditc;
using quditc::testing::random_rotation;

TEST(RotationJson, PinnedEncodingAndRoundTrip) {
    const Rotation r(Axis::Y, -2, 0, 4);
    const json j = rotation_to_json(r);
    EXPECT_EQ(j.dump(), R"({"angle_eighths":-2,"axis":"y","levels":[0,4]})");
    EXPECT_EQ(rotation_from_json(j), r);

    EXPECT_THROW(rotation_from_json(json::parse(R"({"axis":"q","angle_eighths":1,"levels":[0,1]})")),
                 std::invalid_argument);
    EXPECT_THROW(rotation_from_json(json::parse(R"({"axis":"x","angle_eighths":1,"levels":[0]})")),
                 std::invalid_argument);
}

TEST(ProgramJson, RoundTripRandomPrograms) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const SystemShape shape(3);
        RotationProgram p(shape);
        std::uniform_int_distribution<int> layer_count(0, 4);
        std::uniform_int_distribution<int> layer_size(1, 3);
        const int layers = layer_count(rng);
        for (int l = 0; l < layers; ++l) {
            std::vector<Rotation> layer;
            const int size = layer_size(rng);
            for (int i = 0; i < size; ++i) layer.push_back(random_rotation(rng, shape));
            p.layers.push_back(std::move(layer));
        }
        const RotationProgram back = program_from_json(program_to_json(p));
        EXPECT_EQ(back.shape, p.shape);
        EXPECT_EQ(back.layers, p.layers);
    }
}

TEST(ProgramJson, RejectsOutOfRangeLevels) {
    const json j = json::parse(
        R"({"n":2,"layers":[[{"axis":"x","angle_eighths":8,"levels":[0,9]}]]})");
    EXPECT_THROW(program_from_json(j), std::domain_error);
}

TEST(GateJson, AllVariantsRoundTrip) {
    const std::vector<GateSpec> specs{
        HadamardGate{{1, 3}}, NotGate{{2}}, TGate{2}, ControlledNotGate{{1, 2}, 3},
        ControlledZGate{{1}, {2, 3}}};
    for (const auto& spec : specs) {
        const ParsedGate back = gate_from_json(gate_to_json(spec));
        EXPECT_EQ(back.spec, spec);
        EXPECT_TRUE(back.t_use_ancilla);
    }
}

TEST(GateJson, TGateAncillaFlagAndErrors) {
    const ParsedGate g = gate_from_json(json::parse(R"({"t":{"target":2,"ancilla":false}})"));
    EXPECT_FALSE(g.t_use_ancilla);
    EXPECT_EQ(g.spec, GateSpec{TGate{2}});

    EXPECT_THROW(gate_from_json(json::parse(R"({"swap":{"targets":[1,2]}})")),
                 std::invalid_argument);
    EXPECT_THROW(gate_from_json(json::parse(R"({"h":{"targets":[1]},"x":{"targets":[2]}})")),
                 std::invalid_argument);
}

TEST(CircuitJson, RoundTripAndValidation) {
    CircuitFile circuit;
    circuit.n = 3;
    circuit.gates = {HadamardGate{{1, 2, 3}}, ControlledZGate{{1, 2}, {3}}};
    const CircuitFile back = circuit_from_json(circuit_to_json(circuit));
    EXPECT_EQ(back.n, 3);
    ASSERT_EQ(back.gates.size(), 2u);
    EXPECT_EQ(back.gates[0], circuit.gates[0]);
    EXPECT_EQ(back.gates[1], circuit.gates[1]);

    EXPECT_THROW(circuit_from_json(json::parse(R"({"n":2,"gates":[{"h":{"targets":[3]}}]})")),
                 std::domain_error);
}

TEST(StateJson, RoundTripAndShapeInference) {
    const SystemShape shape(2);
    QuditState state(shape);
    state.amplitudes = {cdouble{0.5, 0}, cdouble{0, 0.5}, cdouble{-0.5, 0}, cdouble{0, -0.5},
                        cdouble{0, 0}};
    const QuditState back = state_from_json(state_to_json(state));
    EXPECT_EQ(back.shape, shape);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i)
        EXPECT_LT(std::abs(back.amplitudes[i] - state.amplitudes[i]), 1e-12);

    EXPECT_THROW(state_from_json(json::parse("[[1,0],[0,0]]")), std::invalid_argument);
    EXPECT_THROW(state_from_json(json::parse("[[1,0],[0,0],[0,0],[0,0]]")),
                 std::invalid_argument);
}

TEST(ProbabilitiesCsv, PinnedSmallOutput) {
    const SystemShape shape(1);
    QuditState state(shape);
    state.amplitudes = {cdouble{1, 0}, cdouble{0, 0}, cdouble{0, 0}};
    EXPECT_EQ(probabilities_csv(state),
              "level,bits,probability\n"
              "0,0,1\n"
              "1,1,0\n"
              "2,ancilla,0\n");
}

TEST(FloatFormat, DefaultAndEnvOverride) {
    unsetenv("QUDITC_FLOAT_DIGITS");
    EXPECT_EQ(float_digits(), 12);
    EXPECT_EQ(fmt_float(0.5), "0.5");
    EXPECT_EQ(fmt_float(1.0 / 3.0), "0.333333333333");

    setenv("QUDITC_FLOAT_DIGITS", "4", 1);
    EXPECT_EQ(float_digits(), 4);
    EXPECT_EQ(fmt_float(1.0 / 3.0), "0.3333");
    setenv("QUDITC_FLOAT_DIGITS", "99", 1);
    EXPECT_EQ(float_digits(), 12);
    unsetenv("QUDITC_FLOAT_DIGITS");
}

TEST(RecordJson, CarriesCountsAndPairings) {
    const SystemShape shape(3);
    const auto rec = synth_hadamard({1}, shape);
    const json j = record_to_json(rec);
    EXPECT_EQ(j.at("rotation_count").get<int>(), 6);
    EXPECT_EQ(j.at("depth").get<int>(), 2);
    EXPECT_FALSE(j.at("uses_ancilla").get<bool>());
    EXPECT_EQ(j.at("pairings").size(), 2u);
    EXPECT_EQ(j.at("pairings")[0].size(), 4u);
    EXPECT_EQ(j.at("program").at("n").get<int>(), 3);

    const std::string table = record_table(rec);
    EXPECT_NE(table.find("H[1]"), std::string::npos);
    EXPECT_NE(table.find("R_y(-pi/2)(0,4)"), std::string::npos);
}

TEST(MetricsJson, PerGateEntries) {
    const SystemShape shape(3);
    const auto joined =
        concat({synth_hadamard({1}, shape).program, synth_mcz({1, 2}, {3}, shape).program});
    const json j = metrics_to_json(metrics(joined));
    EXPECT_EQ(j.at("rotation_count").get<int>(), 7);
    EXPECT_EQ(j.at("depth").get<int>(), 3);
    ASSERT_EQ(j.at("per_gate").size(), 2u);
    EXPECT_EQ(j.at("per_gate")[1].at("gate").get<std::string>(), "CZ[1,2->3]");
}
