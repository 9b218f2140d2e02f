#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tqc/compiler.hpp"
#include "tqc/verifier.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

struct Cli {
    std::string input;
    std::string output_dir = ".";
    bool sweep_starts = false;
    bool emit_geometry = false;
    std::size_t max_traversals = 0;
};

tqc::CompiledCircuit compile(const Cli& cli) {
    tqc::GeometryDoc doc = tqc::parse_geometry(read_file(cli.input));
    tqc::CompileOptions opts;
    opts.sweep_starts = cli.sweep_starts;
    opts.max_traversals = cli.max_traversals;
    return tqc::compile_circuit(doc, opts);
}

int run_map(const Cli& cli) {
    tqc::CompiledCircuit circuit = compile(cli);
    tqc::Lattice lattice(circuit.lattice);
    std::vector<tqc::QubitTuple> tuples = circuit.tuples();

    fs::path dir(cli.output_dir);
    fs::create_directories(dir);
    write_file(dir / "instructions.txt", tqc::emit_instructions(lattice, tuples));
    write_file(dir / "tracking.txt", tqc::emit_tracking(tuples));
    if (cli.emit_geometry) {
        std::vector<std::vector<tqc::SubSheet>> subs;
        for (const auto& q : circuit.qubits) subs.push_back(q.subsheets);
        write_file(dir / "geometry.txt", tqc::emit_geometry_mesh(tuples, subs));
    }
    return 0;
}

int run_verify(const Cli& cli) {
    tqc::CompiledCircuit circuit = compile(cli);
    tqc::Lattice lattice(circuit.lattice);

    // Surfacing emission errors (defect collisions) counts as verification.
    tqc::emit_instructions(lattice, circuit.tuples());

    bool all_pass = true;
    for (const tqc::CompiledQubit& q : circuit.qubits) {
        tqc::SurfaceReport sheet =
            tqc::verify_surface(lattice, q.tuple.sheet(), q.tuple, tqc::SurfaceKind::Sheet);
        tqc::SurfaceReport tube =
            tqc::verify_surface(lattice, q.tuple.tube(), q.tuple, tqc::SurfaceKind::Tube);
        tqc::TupleReport tuple = tqc::verify_tuple(lattice, q.tuple);
        std::cout << sheet.line() << "\n" << tube.line() << "\n" << tuple.line() << "\n";
        all_pass = all_pass && sheet.pass && tube.pass && tuple.pass;
    }
    return all_pass ? 0 : 2;
}

int run_stats(const Cli& cli) {
    tqc::CompiledCircuit circuit = compile(cli);
    for (const tqc::CompiledQubit& q : circuit.qubits) {
        std::cout << "qubit " << q.tuple.id << " layer=" << tqc::to_string(q.tuple.layer)
                  << " K=" << q.cycle_size << " visits=" << q.tube_stats.visits
                  << " traversals=" << q.sheet_stats.traversals
                  << " reshapes=" << q.sheet_stats.reshapes
                  << " max_consecutive_reshapes=" << q.sheet_stats.max_consecutive_reshapes
                  << " D=" << q.tuple.defect.size() << " I=" << q.tuple.inputs.size()
                  << " O=" << q.tuple.outputs.size() << " J=" << q.tuple.inject.size()
                  << " X=" << q.tuple.x.size() << " Z=" << q.tuple.z.size() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maps topological circuit geometry onto cluster-lattice measurement "
                 "instructions and correlation-surface tracking sets"};
    app.require_subcommand(1);

    Cli cli;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", cli.input, "geometry document")->required();
        cmd->add_flag("--sweep-starts", cli.sweep_starts,
                      "run all start rotations and require identical sheets");
        cmd->add_option("--max-traversals", cli.max_traversals,
                        "override the sheet-finding traversal bound");
    };

    CLI::App* map_cmd = app.add_subcommand("map", "write instruction stream and tracking file");
    add_common(map_cmd);
    map_cmd->add_option("-o,--output-dir", cli.output_dir, "output directory");
    map_cmd->add_flag("--emit-geometry", cli.emit_geometry,
                      "also write sub-sheet rectangles and qubit sets as a point list");

    CLI::App* verify_cmd = app.add_subcommand("verify", "map, then check every surface");
    add_common(verify_cmd);

    CLI::App* stats_cmd = app.add_subcommand("stats", "print per-qubit mapping statistics");
    add_common(stats_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (map_cmd->parsed()) return run_map(cli);
        if (verify_cmd->parsed()) return run_verify(cli);
        return run_stats(cli);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
