// cli.hpp
// Command-line front end. Subcommands: synth, run, simulate, depth, grover,
// table, verify. Exit codes: 0 success, 2 usage or parse error, 3 validation
// or equivalence failure.

#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quditc/io.hpp"

namespace quditc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

namespace cli_detail {

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(in);
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write file: " + path);
    file << text;
}

struct SynthOptions {
    std::string gate_json;
    int n = 0;
    std::string format = "json";
    bool explain = false;
    std::string out_path;
};

inline int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
    SynthesisRecord rec = [&] {
        const ParsedGate gate = gate_from_json(json::parse(opt.gate_json));
        const SystemShape shape(opt.n);
        if (const auto* t = std::get_if<TGate>(&gate.spec); t && !gate.t_use_ancilla)
            return synth_t(t->target, shape, false);
        return synth_gate(gate.spec, shape);
    }();
    std::ostringstream text;
    if (opt.format == "table" || opt.explain) text << record_table(rec);
    if (opt.format == "json") text << record_to_json(rec).dump(2) << "\n";
    write_output(text.str(), opt.out_path, out);
    (void)err;
    return kExitOk;
}

struct RunOptions {
    std::string circuit_path;
    std::string state_path;
    std::string out_state_path;
    std::string out_probs_path;
};

inline int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const CircuitFile circuit = circuit_from_json(load_json_file(opt.circuit_path));
    const SystemShape shape(circuit.n);

    std::vector<RotationProgram> parts;
    for (const auto& spec : circuit.gates) parts.push_back(synth_gate(spec, shape).program);

    RotationProgram program(shape);
    if (!parts.empty()) program = concat(parts);

    const ValidationResult validation = validate_program(program);
    if (!validation) {
        err << "layer validation failed: " << validation.message << "\n";
        return kExitValidation;
    }

    QuditState state = ground_state(shape);
    if (!opt.state_path.empty()) {
        state = state_from_json(load_json_file(opt.state_path));
        if (state.shape != shape)
            throw std::invalid_argument("input state size does not match circuit qubit count");
    }
    apply_program_in_place(state, program);

    out << metrics_table(metrics(program));
    if (!opt.out_state_path.empty())
        write_output(state_to_json(state).dump() + "\n", opt.out_state_path, out);
    else
        out << state_to_json(state).dump() << "\n";
    if (!opt.out_probs_path.empty())
        write_output(probabilities_csv(state), opt.out_probs_path, out);
    else
        out << probabilities_csv(state);
    return kExitOk;
}

struct SimulateOptions {
    std::string program_path;
    std::string state_path;
    std::string out_state_path;
    std::string out_probs_path;
};

inline int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
    const RotationProgram program = program_from_json(load_json_file(opt.program_path));
    const ValidationResult validation = validate_program(program);
    if (!validation) {
        err << "layer validation failed: " << validation.message << "\n";
        return kExitValidation;
    }
    QuditState state = ground_state(program.shape);
    if (!opt.state_path.empty()) {
        state = state_from_json(load_json_file(opt.state_path));
        if (state.shape != program.shape)
            throw std::invalid_argument("input state size does not match program");
    }
    apply_program_in_place(state, program);
    if (!opt.out_state_path.empty())
        write_output(state_to_json(state).dump() + "\n", opt.out_state_path, out);
    else
        out << state_to_json(state).dump() << "\n";
    if (!opt.out_probs_path.empty())
        write_output(probabilities_csv(state), opt.out_probs_path, out);
    else
        out << probabilities_csv(state);
    return kExitOk;
}

struct DepthOptions {
    std::string program_path;
    bool merge = false;
    std::string format = "table";
};

inline int cmd_depth(const DepthOptions& opt, std::ostream& out, std::ostream& err) {
    RotationProgram program = program_from_json(load_json_file(opt.program_path));
    const ValidationResult validation = validate_program(program);
    if (!validation) {
        err << "layer validation failed: " << validation.message << "\n";
        return kExitValidation;
    }
    if (opt.merge) program = merge_adjacent(program);
    const DepthMetrics m = metrics(program);
    if (opt.format == "json") out << metrics_to_json(m).dump(2) << "\n";
    else out << metrics_table(m);
    return kExitOk;
}

struct GroverOptions {
    int n = 0;
    std::string marked_bits;
    std::string iterations = "auto";
    std::string format = "table";
    std::string out_path;
};

inline int cmd_grover(const GroverOptions& opt, std::ostream& out, std::ostream& err) {
    const SystemShape shape(opt.n);
    int marked = shape.d - 1;
    if (!opt.marked_bits.empty()) {
        if (opt.marked_bits.size() != static_cast<std::size_t>(opt.n))
            throw std::invalid_argument("--marked must be a bit string of length N");
        marked = bits_to_index(opt.marked_bits);
    }
    std::optional<int> iterations;
    if (opt.iterations != "auto") {
        std::size_t consumed = 0;
        int t = 0;
        try {
            t = std::stoi(opt.iterations, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != opt.iterations.size() || t < 1)
            throw std::invalid_argument("--iterations must be a positive integer or auto");
        iterations = t;
    }
    const GroverReport report = run_grover(opt.n, marked, iterations);
    std::ostringstream text;
    if (opt.format == "json") text << grover_report_to_json(report).dump(2) << "\n";
    else text << grover_report_text(report);
    write_output(text.str(), opt.out_path, out);
    (void)err;
    return kExitOk;
}

struct TableOptions {
    int n_min = 3;
    int n_max = 7;
    std::string format = "csv";
    std::string out_path;
};

inline int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
    const auto rows = comparison_table(opt.n_min, opt.n_max);
    std::ostringstream text;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(grover_report_to_json(r));
        text << arr.dump(2) << "\n";
    } else if (opt.format == "table") {
        text << comparison_text(rows);
    } else {
        text << comparison_csv(rows);
    }
    write_output(text.str(), opt.out_path, out);
    (void)err;
    return kExitOk;
}

struct VerifyOptions {
    int n = 0;  // 0 = sweep 1..5
    std::string format = "table";
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<int> sweep;
    if (opt.n > 0) sweep.push_back(opt.n);
    else for (int n = 1; n <= 5; ++n) sweep.push_back(n);

    json rows = json::array();
    std::size_t failures = 0, total = 0;
    for (int n : sweep) {
        const SystemShape shape(n);
        for (const auto& rec : equivalence_sweep(shape)) {
            const EquivalenceResult result = check_equivalence(rec);
            std::string label = gate_label(rec.spec);
            if (std::holds_alternative<TGate>(rec.spec) && !rec.uses_ancilla)
                label += " (no ancilla)";
            label = "N=" + std::to_string(n) + " " + label;
            ++total;
            if (!result.equal) ++failures;
            if (opt.format == "json") {
                rows.push_back(equivalence_to_json(label, result));
            } else {
                out << (result.equal ? "PASS " : "FAIL ") << label
                    << "  dev=" << fmt_float(result.max_abs_deviation)
                    << " ancilla=" << fmt_float(result.ancilla_coupling) << "\n";
            }
        }
    }
    if (opt.format == "json") {
        out << json{{"total", total}, {"failures", failures}, {"gates", rows}}.dump(2) << "\n";
    } else {
        out << total - failures << "/" << total << " gate equivalences hold\n";
    }
    if (failures) {
        err << failures << " equivalence failure(s)\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qudit gate compiler, scheduler and simulator"};
    app.require_subcommand(1);

    cli_detail::SynthOptions synth_opt;
    auto* synth = app.add_subcommand("synth", "compile one gate to a rotation program");
    synth->add_option("--gate", synth_opt.gate_json, "gate spec as JSON")->required();
    synth->add_option("--n", synth_opt.n, "equivalent qubit count")->required();
    synth->add_option("--format", synth_opt.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    synth->add_flag("--explain", synth_opt.explain, "print the pairing table");
    synth->add_option("--out", synth_opt.out_path, "write output to a file");

    cli_detail::RunOptions run_opt;
    auto* run = app.add_subcommand("run", "compile and simulate a circuit file");
    run->add_option("--circuit", run_opt.circuit_path, "circuit JSON file")->required();
    run->add_option("--state", run_opt.state_path, "input state JSON (default: ground state)");
    run->add_option("--out-state", run_opt.out_state_path, "write final state JSON here");
    run->add_option("--out-probs", run_opt.out_probs_path, "write probability CSV here");

    cli_detail::SimulateOptions simulate_opt;
    auto* simulate = app.add_subcommand("simulate", "apply a compiled program to a state");
    simulate->add_option("--program", simulate_opt.program_path, "program JSON file")->required();
    simulate->add_option("--state", simulate_opt.state_path,
                         "input state JSON (default: ground state)");
    simulate->add_option("--out-state", simulate_opt.out_state_path, "write final state JSON here");
    simulate->add_option("--out-probs", simulate_opt.out_probs_path, "write probability CSV here");

    cli_detail::DepthOptions depth_opt;
    auto* depth = app.add_subcommand("depth", "report depth metrics of a program file");
    depth->add_option("--program", depth_opt.program_path, "program JSON file")->required();
    depth->add_flag("--merge", depth_opt.merge, "greedily merge commuting adjacent layers");
    depth->add_option("--format", depth_opt.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    cli_detail::GroverOptions grover_opt;
    auto* grover = app.add_subcommand("grover", "build and simulate a Grover search");
    grover->add_option("--n", grover_opt.n, "equivalent qubit count")->required();
    grover->add_option("--marked", grover_opt.marked_bits, "marked bit string (default all ones)");
    grover->add_option("--iterations", grover_opt.iterations, "iteration count or 'auto'");
    grover->add_option("--format", grover_opt.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    grover->add_option("--out", grover_opt.out_path, "write output to a file");

    cli_detail::TableOptions table_opt;
    auto* table = app.add_subcommand("table", "qudit vs qubit Grover depth comparison table");
    table->add_option("--n-min", table_opt.n_min, "smallest qubit count");
    table->add_option("--n-max", table_opt.n_max, "largest qubit count");
    table->add_option("--format", table_opt.format, "csv|table|json")
        ->check(CLI::IsMember({"csv", "table", "json"}));
    table->add_option("--out", table_opt.out_path, "write output to a file");

    cli_detail::VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "check all synthesized gates against the qubit matrices");
    verify->add_option("--n", verify_opt.n, "single qubit count (default: sweep 1..5)");
    verify->add_option("--format", verify_opt.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (synth->parsed()) return cli_detail::cmd_synth(synth_opt, out, err);
        if (run->parsed()) return cli_detail::cmd_run(run_opt, out, err);
        if (simulate->parsed()) return cli_detail::cmd_simulate(simulate_opt, out, err);
        if (depth->parsed()) return cli_detail::cmd_depth(depth_opt, out, err);
        if (grover->parsed()) return cli_detail::cmd_grover(grover_opt, out, err);
        if (table->parsed()) return cli_detail::cmd_table(table_opt, out, err);
        if (verify->parsed()) return cli_detail::cmd_verify(verify_opt, out, err);
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

inline int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(std::move(args), std::cout, std::cerr);
}

}  // namespace quditc
