// io.hpp
// JSON, CSV and text encodings. Wire layouts:
//   rotation  {"axis": "x"|"y"|"z", "angle_eighths": int, "levels": [j, k]}
//   program   {"n": N, "layers": [[rotation, ...], ...]}
//   gate      {"h": {"targets": [...]}} | {"x": {"targets": [...]}}
//             | {"t": {"target": k}} | {"cnot": {"controls": [...], "target": k}}
//             | {"mcz": {"controls": [...], "targets": [...]}}
//   circuit   {"n": N, "gates": [gate, ...]}
//   state     [[re, im], ...] of length D+1
// Floats are rendered with a fixed number of significant digits (default 12,
// QUDITC_FLOAT_DIGITS overrides) so identical inputs give identical bytes.

#pragma once

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "quditc/gate_spec.hpp"
#include "quditc/grover.hpp"
#include "quditc/qubit_reference.hpp"
#include "quditc/rotation.hpp"
#include "quditc/schedule.hpp"
#include "quditc/state.hpp"
#include "quditc/synth.hpp"

namespace quditc {

using nlohmann::json;

inline int float_digits() {
    if (const char* env = std::getenv("QUDITC_FLOAT_DIGITS")) {
        const int v = std::atoi(env);
        if (v >= 1 && v <= 17) return v;
    }
    return 12;
}

inline std::string fmt_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", float_digits(), x);
    return buf;
}

// Rounds to the configured significant digits so JSON output is stable.
inline double round_sig(double x) {
    return std::strtod(fmt_float(x).c_str(), nullptr);
}

// ---- rotations and programs -------------------------------------------------

inline json rotation_to_json(const Rotation& r) {
    return json{{"axis", std::string(1, axis_name(r.axis))},
                {"angle_eighths", r.angle_eighths},
                {"levels", json::array({r.lower, r.upper})}};
}

inline Rotation rotation_from_json(const json& j) {
    const std::string axis = j.at("axis").get<std::string>();
    Axis ax;
    if (axis == "x") ax = Axis::X;
    else if (axis == "y") ax = Axis::Y;
    else if (axis == "z") ax = Axis::Z;
    else throw std::invalid_argument("rotation: unknown axis '" + axis + "'");
    const auto& levels = j.at("levels");
    if (!levels.is_array() || levels.size() != 2)
        throw std::invalid_argument("rotation: levels must be [j, k]");
    return Rotation(ax, j.at("angle_eighths").get<int>(), levels[0].get<int>(),
                    levels[1].get<int>());
}

inline json program_to_json(const RotationProgram& p) {
    json layers = json::array();
    for (const auto& layer : p.layers) {
        json jl = json::array();
        for (const auto& r : layer) jl.push_back(rotation_to_json(r));
        layers.push_back(std::move(jl));
    }
    return json{{"n", p.shape.n}, {"layers", std::move(layers)}};
}

inline RotationProgram program_from_json(const json& j) {
    RotationProgram p{SystemShape(j.at("n").get<int>())};
    for (const auto& jl : j.at("layers")) {
        std::vector<Rotation> layer;
        for (const auto& jr : jl) {
            Rotation r = rotation_from_json(jr);
            check_rotation_levels(r, p.shape);
            layer.push_back(r);
        }
        p.layers.push_back(std::move(layer));
    }
    return p;
}

// ---- gate specs and circuit files -------------------------------------------

namespace detail {

inline std::set<int> int_set(const json& j) {
    std::set<int> out;
    for (const auto& v : j) out.insert(v.get<int>());
    return out;
}

inline json int_set_json(const std::set<int>& s) {
    json out = json::array();
    for (int v : s) out.push_back(v);
    return out;
}

}  // namespace detail

inline json gate_to_json(const GateSpec& spec) {
    return std::visit(
        [](const auto& g) -> json {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, HadamardGate>) {
                return json{{"h", {{"targets", detail::int_set_json(g.targets)}}}};
            } else if constexpr (std::is_same_v<G, NotGate>) {
                return json{{"x", {{"targets", detail::int_set_json(g.targets)}}}};
            } else if constexpr (std::is_same_v<G, TGate>) {
                return json{{"t", {{"target", g.target}}}};
            } else if constexpr (std::is_same_v<G, ControlledNotGate>) {
                return json{{"cnot",
                             {{"controls", detail::int_set_json(g.controls)},
                              {"target", g.target}}}};
            } else {
                return json{{"mcz",
                             {{"controls", detail::int_set_json(g.controls)},
                              {"targets", detail::int_set_json(g.targets)}}}};
            }
        },
        spec);
}

struct ParsedGate {
    GateSpec spec;
    bool t_use_ancilla = true;  // honored by the synth command for "t" gates
};

inline ParsedGate gate_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1)
        throw std::invalid_argument("gate: expected exactly one of h/x/t/cnot/mcz");
    const auto it = j.begin();
    const std::string kind = it.key();
    const json& body = it.value();
    ParsedGate out;
    if (kind == "h") {
        out.spec = HadamardGate{detail::int_set(body.at("targets"))};
    } else if (kind == "x") {
        out.spec = NotGate{detail::int_set(body.at("targets"))};
    } else if (kind == "t") {
        out.spec = TGate{body.at("target").get<int>()};
        if (body.contains("ancilla")) out.t_use_ancilla = body.at("ancilla").get<bool>();
    } else if (kind == "cnot") {
        out.spec = ControlledNotGate{detail::int_set(body.at("controls")),
                                     body.at("target").get<int>()};
    } else if (kind == "mcz") {
        std::set<int> controls;
        if (body.contains("controls")) controls = detail::int_set(body.at("controls"));
        out.spec = ControlledZGate{std::move(controls), detail::int_set(body.at("targets"))};
    } else {
        throw std::invalid_argument("gate: unknown kind '" + kind + "'");
    }
    return out;
}

struct CircuitFile {
    int n = 1;
    std::vector<GateSpec> gates;
};

inline json circuit_to_json(const CircuitFile& c) {
    json gates = json::array();
    for (const auto& g : c.gates) gates.push_back(gate_to_json(g));
    return json{{"n", c.n}, {"gates", std::move(gates)}};
}

inline CircuitFile circuit_from_json(const json& j) {
    CircuitFile c;
    c.n = j.at("n").get<int>();
    const SystemShape shape(c.n);
    for (const auto& jg : j.at("gates")) {
        ParsedGate g = gate_from_json(jg);
        validate_spec(g.spec, shape);
        c.gates.push_back(std::move(g.spec));
    }
    return c;
}

// ---- states ------------------------------------------------------------------

inline json state_to_json(const QuditState& state) {
    json out = json::array();
    for (const auto& a : state.amplitudes)
        out.push_back(json::array({round_sig(a.real()), round_sig(a.imag())}));
    return out;
}

inline QuditState state_from_json(const json& j) {
    if (!j.is_array() || j.size() < 3)
        throw std::invalid_argument("state: expected an array of [re, im] pairs");
    const auto total = j.size();
    const auto d = total - 1;
    int n = 0;
    while ((std::size_t{1} << n) < d) ++n;
    if ((std::size_t{1} << n) != d)
        throw std::invalid_argument("state: length must be 2^N + 1");
    QuditState state{SystemShape(n)};
    for (std::size_t i = 0; i < total; ++i) {
        const auto& pair = j[i];
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("state: entries must be [re, im]");
        state.amplitudes[i] = cdouble{pair[0].get<double>(), pair[1].get<double>()};
    }
    return state;
}

inline std::string probabilities_csv(const QuditState& state) {
    std::ostringstream out;
    out << "level,bits,probability\n";
    const auto probs = probabilities(state);
    for (int d = 0; d < state.shape.d; ++d)
        out << d << "," << index_to_bits(d, state.shape.n) << ","
            << fmt_float(probs[static_cast<std::size_t>(d)]) << "\n";
    out << state.shape.ancilla() << ",ancilla," << fmt_float(probs.back()) << "\n";
    return out.str();
}

// ---- synthesis records -------------------------------------------------------

inline json record_to_json(const SynthesisRecord& rec) {
    json pairings = json::array();
    for (const auto& layer : rec.pairings) {
        json jl = json::array();
        for (const auto& [l, u] : layer) jl.push_back(json::array({l, u}));
        pairings.push_back(std::move(jl));
    }
    return json{{"gate", gate_to_json(rec.spec)},
                {"n", rec.program.shape.n},
                {"rotation_count", rec.rotation_count()},
                {"depth", rec.depth()},
                {"uses_ancilla", rec.uses_ancilla},
                {"pairings", std::move(pairings)},
                {"program", program_to_json(rec.program)}};
}

// Pairing table for --explain, one line per layer.
inline std::string record_table(const SynthesisRecord& rec) {
    std::ostringstream out;
    out << gate_label(rec.spec) << " on D = " << rec.program.shape.d << " (+ancilla)\n";
    out << "rotations: " << rec.rotation_count() << "  depth: " << rec.depth()
        << "  ancilla: " << (rec.uses_ancilla ? "yes" : "no") << "\n";
    for (std::size_t li = 0; li < rec.program.layers.size(); ++li) {
        out << "layer " << li + 1 << ": {";
        const auto& layer = rec.program.layers[li];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (i) out << " ";
            out << to_string(layer[i]);
        }
        out << "}\n";
    }
    return out.str();
}

// ---- metrics -----------------------------------------------------------------

inline json metrics_to_json(const DepthMetrics& m) {
    json per_gate = json::array();
    for (const auto& g : m.per_gate)
        per_gate.push_back(json{
            {"gate", g.label}, {"rotation_count", g.rotation_count}, {"depth", g.depth}});
    return json{{"rotation_count", m.rotation_count},
                {"depth", m.depth},
                {"per_gate", std::move(per_gate)}};
}

inline std::string metrics_table(const DepthMetrics& m) {
    std::ostringstream out;
    out << "rotations: " << m.rotation_count << "\n";
    out << "depth:     " << m.depth << "\n";
    if (!m.per_gate.empty()) {
        out << "per gate:\n";
        for (const auto& g : m.per_gate)
            out << "  " << g.label << "  rotations=" << g.rotation_count
                << " depth=" << g.depth << "\n";
    }
    return out.str();
}

// ---- Grover reports ----------------------------------------------------------

inline json grover_report_to_json(const GroverReport& r) {
    return json{{"n", r.n},
                {"d", r.d},
                {"marked", r.marked},
                {"iterations", r.iterations},
                {"qudit_depth", r.qudit_depth},
                {"qudit_rotation_count", r.qudit_rotation_count},
                {"qubit_depth_linear", r.qubit_depth_linear},
                {"theoretical_amplitude", round_sig(r.theoretical_amplitude)},
                {"theoretical_probability", round_sig(r.theoretical_probability)},
                {"simulated_probability", round_sig(r.simulated_probability)},
                {"max_ancilla_leak", round_sig(r.max_ancilla_leak)}};
}

inline std::string grover_report_text(const GroverReport& r) {
    std::ostringstream out;
    out << "Grover search: N=" << r.n << " (D=" << r.d << "), marked level " << r.marked
        << ", iterations " << r.iterations << "\n";
    out << "qudit depth:             " << r.qudit_depth << "\n";
    out << "qudit rotations:         " << r.qudit_rotation_count << "\n";
    out << "qubit depth (linear):    ";
    if (r.qubit_depth_linear > 0) out << r.qubit_depth_linear;
    else out << "n/a";
    out << "\n";
    out << "theoretical amplitude:   " << fmt_float(r.theoretical_amplitude) << "\n";
    out << "theoretical probability: " << fmt_float(r.theoretical_probability) << "\n";
    out << "simulated probability:   " << fmt_float(r.simulated_probability) << "\n";
    return out.str();
}

// Comparison table, one row per N. The accuracy column is the marked-state
// amplitude (in percent); the squared success probability is also given.
inline std::string comparison_csv(const std::vector<GroverReport>& rows) {
    std::ostringstream out;
    out << "n,levels,iterations,theoretical_accuracy_percent,success_probability_percent,"
           "qudit_depth,qubit_depth\n";
    for (const auto& r : rows) {
        char acc[32], prob[32];
        std::snprintf(acc, sizeof(acc), "%.2f", 100.0 * r.theoretical_amplitude);
        std::snprintf(prob, sizeof(prob), "%.2f", 100.0 * r.theoretical_probability);
        out << r.n << "," << r.d << "," << r.iterations << "," << acc << "," << prob << ","
            << r.qudit_depth << "," << r.qubit_depth_linear << "\n";
    }
    return out.str();
}

inline std::string comparison_text(const std::vector<GroverReport>& rows) {
    std::ostringstream out;
    out << "  N   levels  iters  accuracy%  success%  qudit depth  qubit depth\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%3d %8d %6d %10.2f %9.2f %12zu %12lld\n", r.n, r.d,
                      r.iterations, 100.0 * r.theoretical_amplitude,
                      100.0 * r.theoretical_probability, r.qudit_depth, r.qubit_depth_linear);
        out << line;
    }
    return out.str();
}

// ---- equivalence reports -------------------------------------------------------

inline json equivalence_to_json(const std::string& label, const EquivalenceResult& r) {
    return json{{"gate", label},
                {"equal", r.equal},
                {"max_abs_deviation", round_sig(r.max_abs_deviation)},
                {"ancilla_coupling", round_sig(r.ancilla_coupling)},
                {"global_phase", json::array({round_sig(r.global_phase.real()),
                                              round_sig(r.global_phase.imag())})}};
}

}  // namespace quditc
