#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tqc/cycle_graph.hpp"
#include "tqc/lattice.hpp"

namespace tqc {

// Injection point: the center at the middle of an inject segment plus the
// segment direction, which designates the physical qubit measured in the
// rotated basis (center offset one step along the direction).
struct InjectionPoint {
    Coord center;
    Direction dir;

    Coord designated_qubit() const { return offset(center, dir); }
    bool operator==(const InjectionPoint&) const = default;
};

// Per-qubit output sets. The tube surface is X for primal and Z for dual
// qubits; the sheet fills the other slot.
struct QubitTuple {
    std::string id;
    Layer layer = Layer::Primal;
    CoordSet defect;   // D
    CoordSet inputs;   // I
    CoordSet outputs;  // O
    CoordSet inject;   // J (cell centers)
    CoordSet x;        // X correlation surface
    CoordSet z;        // Z correlation surface

    std::vector<InjectionPoint> injections;
    CoordSet defect_cells;  // cells traversed by defect edges

    CoordSet& tube() { return layer == Layer::Primal ? x : z; }
    const CoordSet& tube() const { return layer == Layer::Primal ? x : z; }
    CoordSet& sheet() { return layer == Layer::Primal ? z : x; }
    const CoordSet& sheet() const { return layer == Layer::Primal ? z : x; }
};

struct TubeStats {
    std::size_t visits = 0;  // edges walked; one full traversal
};

struct TubeResult {
    QubitTuple tuple;
    TubeStats stats;
};

// Single deterministic traversal of the cycle (starting from the lex-min
// vertex) populating D, I, O, J and the tube surface. Cells shared by
// consecutive edges are handled as one pivot group; separate visits to the
// same cell combine with XOR semantics on the tube.
TubeResult map_tubes(const Lattice& lattice, const CycleGraph& graph, Layer layer,
                     const std::string& qubit_id);

}  // namespace tqc
