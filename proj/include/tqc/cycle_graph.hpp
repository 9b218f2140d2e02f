#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tqc/geometry.hpp"
#include "tqc/lattice.hpp"

namespace tqc {

// Directed Hamiltonian cycle over cell centers. Vertices live in a slot
// arena, so handles stay valid across unrelated insertions and removals.
// Each vertex also carries the type of its outgoing edge.
class CycleGraph {
public:
    using VertexId = int;
    static constexpr VertexId kNone = -1;

    CycleGraph() = default;

    // Builds the typed cycle from a validated geometry. Consecutive collinear
    // segments of equal type are merged; different types keep a joint vertex.
    static CycleGraph from_geometry(const LogicalQubitGeometry& q);
    // Test helper: closed cycle through the given pivots, all edges one type.
    static CycleGraph from_cycle(const std::vector<Coord>& coords,
                                 SegmentType type = SegmentType::Defect);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool alive(VertexId v) const;

    VertexId head() const { return head_; }
    VertexId next(VertexId v) const;
    VertexId prev(VertexId v) const;
    // n-th neighbor along the cycle; negative walks backwards.
    VertexId ngh(VertexId v, int n) const;

    Coord coord(VertexId v) const;
    SegmentType out_type(VertexId v) const;
    void set_out_type(VertexId v, SegmentType t);

    // Direction of the outgoing edge (v, next(v)); throws on degenerate edges.
    Direction dir_out(VertexId v) const;
    Direction dir_in(VertexId v) const { return dir_out(prev(v)); }

    // coord(prev) + coord(next) - coord(v): v mirrored across the line
    // through its neighbors.
    Coord mirror(VertexId v) const;

    // Lexicographically smallest coordinate's vertex.
    VertexId lex_min() const;
    VertexId find(Coord c) const;  // first match or kNone

    // Vertices in cycle order starting from `from` (or head).
    std::vector<VertexId> order(VertexId from = kNone) const;
    std::vector<Coord> coords(VertexId from = kNone) const;

    // Removes a vertex whose neighbors are collinear with it (same axis in
    // and out); throws otherwise. Returns the successor.
    VertexId remove(VertexId v);
    // Splits edge (a, c) by a new vertex at b; both new edges must be
    // axis-aligned. Returns the new vertex.
    VertexId insert(VertexId a, Coord b, VertexId c);

    // Cycle surgery without alignment checks, for the rewriting rules that
    // pass through transient diagonal edges. New edges inherit Defect type.
    VertexId unlink(VertexId v);
    VertexId insert_after(VertexId a, Coord b);

    // Copy with all collinear joints merged (edge types collapse to Defect).
    CycleGraph normalized() const;

private:
    struct Node {
        Coord coord;
        SegmentType out_type = SegmentType::Defect;
        VertexId next = kNone;
        VertexId prev = kNone;
        bool alive = false;
    };

    VertexId new_node(Coord c, SegmentType t);
    void check(VertexId v) const;

    std::vector<Node> nodes_;
    VertexId head_ = kNone;
    std::size_t size_ = 0;
};

// a and b with the same axis of approach/exit (straight line or reversal).
bool collinear_at(const CycleGraph& g, CycleGraph::VertexId v);

// Coordinate sequences equal up to rotation (same orientation).
bool equal_up_to_rotation(const CycleGraph& a, const CycleGraph& b);

// Returns b if manhattan(a,b) <= manhattan(a,c), else c.
Coord clst(Coord a, Coord b, Coord c);

}  // namespace tqc
