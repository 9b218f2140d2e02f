#pragma once

#include <cstddef>
#include <vector>

#include "tqc/emitter.hpp"
#include "tqc/geometry.hpp"
#include "tqc/sheet_mapper.hpp"
#include "tqc/tube_mapper.hpp"

namespace tqc {

struct CompileOptions {
    // Run sheet finding from every start rotation and require one sheet set.
    bool sweep_starts = false;
    // Override for the traversal safety bound (0 keeps the default).
    std::size_t max_traversals = 0;
};

struct CompiledQubit {
    QubitTuple tuple;
    std::vector<SubSheet> subsheets;
    std::size_t cycle_size = 0;   // pivot count handed to sheet finding
    TubeStats tube_stats;
    SheetStats sheet_stats;
};

struct CompiledCircuit {
    LatticeSpec lattice;
    std::vector<CompiledQubit> qubits;  // in id order

    std::vector<QubitTuple> tuples() const;
};

// Maps one validated logical qubit: cycle graph, tube traversal, sub-sheet
// finding, sheet assembly. Throws on sweep mismatch when requested.
CompiledQubit compile_qubit(const Lattice& lattice, const LogicalQubitGeometry& geometry,
                            const CompileOptions& opts = {});

// Maps every qubit of the document; qubits are independent and run
// concurrently.
CompiledCircuit compile_circuit(const GeometryDoc& doc, const CompileOptions& opts = {});

}  // namespace tqc
