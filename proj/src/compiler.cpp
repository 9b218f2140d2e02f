#include "tqc/compiler.hpp"

#include <future>
#include <stdexcept>

namespace tqc {

std::vector<QubitTuple> CompiledCircuit::tuples() const {
    std::vector<QubitTuple> out;
    for (const CompiledQubit& q : qubits) out.push_back(q.tuple);
    return out;
}

CompiledQubit compile_qubit(const Lattice& lattice, const LogicalQubitGeometry& geometry,
                            const CompileOptions& opts) {
    CompiledQubit out;
    CycleGraph graph = CycleGraph::from_geometry(geometry);

    TubeResult tubes = map_tubes(lattice, graph, geometry.layer, geometry.id);
    out.tuple = std::move(tubes.tuple);
    out.tube_stats = tubes.stats;

    CycleGraph pivots = graph.normalized();
    out.cycle_size = pivots.size();

    SheetOptions sheet_opts;
    sheet_opts.max_traversals = opts.max_traversals;
    SheetResult sheets = find_subsheets(pivots, sheet_opts);
    out.subsheets = sheets.subs;
    out.sheet_stats = sheets.stats;
    assemble_sheet(lattice, out.subsheets, out.tuple);

    if (opts.sweep_starts) {
        for (std::size_t rot = 0; rot < pivots.size(); ++rot) {
            SheetOptions rotated = sheet_opts;
            rotated.start_rotation = rot;
            SheetResult alt = find_subsheets(pivots, rotated);
            QubitTuple probe = out.tuple;
            assemble_sheet(lattice, alt.subs, probe);
            if (probe.sheet() != out.tuple.sheet())
                throw std::runtime_error("qubit '" + geometry.id +
                                         "': sheet differs for start rotation " +
                                         std::to_string(rot));
        }
    }
    return out;
}

CompiledCircuit compile_circuit(const GeometryDoc& doc, const CompileOptions& opts) {
    CompiledCircuit out;
    out.lattice = doc.lattice;
    Lattice lattice(doc.lattice);

    std::vector<std::future<CompiledQubit>> jobs;
    jobs.reserve(doc.qubits.size());
    for (const LogicalQubitGeometry& q : doc.qubits) {
        jobs.push_back(std::async(std::launch::async, [&lattice, &q, &opts] {
            return compile_qubit(lattice, q, opts);
        }));
    }
    for (auto& job : jobs) out.qubits.push_back(job.get());
    return out;
}

}  // namespace tqc
