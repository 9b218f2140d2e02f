#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tqc/cycle_graph.hpp"
#include "tqc/lattice.hpp"
#include "tqc/tube_mapper.hpp"

namespace tqc {

// Axis-aligned rectangle given by a diagonal of cell centers; the corners
// share at least one component. Degenerate line rectangles are allowed and
// contribute no side qubits.
struct SubSheet {
    Coord ss1;
    Coord ss2;

    bool operator==(const SubSheet&) const = default;
    // Number of axes with differing components (0..2 after validation).
    int extent() const;
    bool degenerate() const { return extent() < 2; }
    // Corner pair normalized to (min, max) per component.
    SubSheet normalized() const;
};

struct ReduceReport {
    Coord removed_a;
    Coord removed_b;
    std::optional<Coord> inserted;  // V^red member placed into the cycle
    std::optional<Coord> deleted;   // flank vertex absorbed by the fold
    // Vertex now following the fold's entry point; anchors sub-sheet records.
    CycleGraph::VertexId anchor = CycleGraph::kNone;
    SubSheet rec1;  // (anchor, a)
    SubSheet rec2;  // (anchor, b)
};

// Folds the U formed by prev(a) -> a -> b -> next(b); requires
// dir(prev(a),a) == -dir(b,next(b)). Removes a and b, inserts the mirrored
// corner when one flank is longer, and absorbs a flank vertex that ends up
// collinear. |K| drops by 2, or by 1 when a genuine 3D corner must survive.
ReduceReport reduce(CycleGraph& g, CycleGraph::VertexId a, CycleGraph::VertexId b);

// Replaces b by its mirror across the line through a and c; |K| unchanged.
// Applying it again at the same place restores the graph.
CycleGraph::VertexId reshape(CycleGraph& g, CycleGraph::VertexId a, CycleGraph::VertexId b,
                             CycleGraph::VertexId c);

struct SheetOptions {
    // Override for the first traversal anchor (vertex index into the initial
    // cycle order from lex_min); used by the start-rotation sweep.
    std::optional<std::size_t> start_rotation;
    // Safety bound on full-cycle traversals; 0 picks 16*|K|^2 + 64.
    std::size_t max_traversals = 0;
};

struct SheetStats {
    std::size_t traversals = 0;
    std::size_t reshapes = 0;
    std::size_t max_consecutive_reshapes = 0;
    std::size_t reduces = 0;
    std::size_t removes = 0;
    // Traversal boundaries where |K| was odd (settling still pending).
    std::size_t odd_boundaries = 0;
};

struct SheetResult {
    std::vector<SubSheet> subs;
    SheetStats stats;
};

// Iteratively rewrites the cycle down to two vertices, recording one pair of
// sub-sheets per reduce and one per reshape. The traversal anchor is the
// lex-min vertex, re-derived whenever a traversal rewrote the graph; after a
// no-op traversal the reshape advances the anchor by one.
SheetResult find_subsheets(CycleGraph graph, const SheetOptions& opts = {});

// All qubit positions inside the rectangle's bounding box.
CoordSet boundingbox(const Lattice& lattice, const SubSheet& ss);

// XOR-union of the sub-sheets' side-qubit patches, stored into the tuple's
// sheet slot (Z for primal, X for dual).
void assemble_sheet(const Lattice& lattice, const std::vector<SubSheet>& subs, QubitTuple& q);

}  // namespace tqc
