#include "tqc/tube_mapper.hpp"

#include <map>
#include <stdexcept>

namespace tqc {

namespace {

struct CellVisit {
    Coord cell;
    Axis axis;
    SegmentType type;
};

void toggle(std::map<Coord, int>& parity, Coord q) { parity[q] ^= 1; }

}  // namespace

TubeResult map_tubes(const Lattice& lattice, const CycleGraph& graph, Layer layer,
                     const std::string& qubit_id) {
    QubitTuple q;
    q.id = qubit_id;
    q.layer = layer;
    TubeStats stats;

    if (graph.empty()) return {q, stats};

    CycleGraph::VertexId start = graph.lex_min();
    PositionClass centers = center_class(layer);

    // Walk every edge once, collecting per-cell visits in traversal order.
    std::vector<CellVisit> visits;
    CycleGraph::VertexId ck = start;
    do {
        CycleGraph::VertexId nk = graph.next(ck);
        Coord b = graph.coord(ck);
        Coord e = graph.coord(nk);
        Direction d = graph.dir_out(ck);
        SegmentType type = graph.out_type(ck);
        if (parity_class(b) != centers || parity_class(e) != centers)
            throw std::invalid_argument("cycle vertex off the " + std::string(to_string(layer)) +
                                        " center grid");
        for (Coord cc : cells_on_segment(b, e)) visits.push_back({cc, d.axis, type});
        if (type == SegmentType::Inject) {
            Coord mid{(b.w + e.w) / 2, (b.h + e.h) / 2, (b.t + e.t) / 2};
            if (parity_class(mid) != centers)
                throw std::invalid_argument("injection midpoint " + mid.str() +
                                            " is not a valid center");
            q.inject.insert(mid);
            q.injections.push_back({mid, d});
        }
        ++stats.visits;
        ck = nk;
        if (stats.visits > graph.size())
            throw std::logic_error("traversal failed to return to start");
    } while (ck != start);
    if (stats.visits != graph.size()) throw std::logic_error("traversal failed to cover cycle");

    // Group consecutive visits at the same cell (pivots and type joints),
    // including the wrap between the last and first edge.
    struct Group {
        Coord cell;
        std::vector<CellVisit> members;
    };
    std::vector<Group> groups;
    for (const CellVisit& v : visits) {
        if (!groups.empty() && groups.back().cell == v.cell) {
            groups.back().members.push_back(v);
        } else {
            groups.push_back({v.cell, {v}});
        }
    }
    if (groups.size() > 1 && groups.front().cell == groups.back().cell) {
        for (CellVisit& v : groups.front().members) groups.back().members.push_back(v);
        groups.erase(groups.begin());
    }

    // Tube: every defect visit adds the cell's four transverse face qubits.
    // Visits merged into one group (pivots) union; separate visits to the
    // same cell (defects wider than one cell) combine with XOR.
    std::map<Coord, int> tube_parity;
    for (const Group& g : groups) {
        CoordSet group_tube;
        bool has_defect = false;
        for (const CellVisit& v : g.members) {
            auto pair = lattice.axis_face_pair(g.cell, v.axis);
            CoordSet* target = nullptr;
            switch (v.type) {
                case SegmentType::Defect: target = &q.defect; break;
                case SegmentType::Init: target = &q.inputs; break;
                case SegmentType::Measure: target = &q.outputs; break;
                case SegmentType::Inject: target = &q.defect; break;
            }
            target->insert(pair[0]);
            target->insert(pair[1]);
            if (v.type == SegmentType::Defect) {
                has_defect = true;
                for (Coord f : lattice.face_qubits(g.cell)) {
                    if (f != pair[0] && f != pair[1]) group_tube.insert(f);
                }
            }
        }
        if (has_defect) {
            q.defect_cells.insert(g.cell);
            for (Coord f : group_tube) toggle(tube_parity, f);
        }
    }

    CoordSet& tube = q.tube();
    for (const auto& [coord, bit] : tube_parity) {
        if (bit) tube.insert(coord);
    }
    return {q, stats};
}

}  // namespace tqc
