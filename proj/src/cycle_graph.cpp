#include "tqc/cycle_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqc {

CycleGraph::VertexId CycleGraph::new_node(Coord c, SegmentType t) {
    nodes_.push_back({c, t, kNone, kNone, true});
    ++size_;
    return static_cast<VertexId>(nodes_.size() - 1);
}

void CycleGraph::check(VertexId v) const {
    if (v < 0 || v >= static_cast<VertexId>(nodes_.size()) || !nodes_[v].alive)
        throw std::invalid_argument("stale or invalid vertex handle");
}

bool CycleGraph::alive(VertexId v) const {
    return v >= 0 && v < static_cast<VertexId>(nodes_.size()) && nodes_[v].alive;
}

CycleGraph CycleGraph::from_geometry(const LogicalQubitGeometry& q) {
    // Merge collinear runs of equal type first.
    std::vector<Segment> segs;
    for (const Segment& s : q.segments) {
        if (!segs.empty() && segs.back().type == s.type &&
            segs.back().direction() == s.direction() && segs.back().end == s.begin) {
            segs.back().end = s.end;
        } else {
            segs.push_back(s);
        }
    }
    if (segs.size() > 1 && segs.front().type == segs.back().type &&
        segs.front().direction() == segs.back().direction() &&
        segs.back().end == segs.front().begin) {
        segs.front().begin = segs.back().begin;
        segs.pop_back();
    }

    CycleGraph g;
    VertexId first = kNone;
    VertexId last = kNone;
    for (const Segment& s : segs) {
        VertexId v = g.new_node(s.begin, s.type);
        if (first == kNone) {
            first = v;
        } else {
            g.nodes_[last].next = v;
            g.nodes_[v].prev = last;
        }
        last = v;
    }
    g.nodes_[last].next = first;
    g.nodes_[first].prev = last;
    g.head_ = first;
    return g;
}

CycleGraph CycleGraph::from_cycle(const std::vector<Coord>& coords, SegmentType type) {
    if (coords.size() < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
    CycleGraph g;
    VertexId first = kNone;
    VertexId last = kNone;
    for (Coord c : coords) {
        VertexId v = g.new_node(c, type);
        if (first == kNone) {
            first = v;
        } else {
            g.nodes_[last].next = v;
            g.nodes_[v].prev = last;
        }
        last = v;
    }
    g.nodes_[last].next = first;
    g.nodes_[first].prev = last;
    g.head_ = first;
    return g;
}

CycleGraph::VertexId CycleGraph::next(VertexId v) const {
    check(v);
    return nodes_[v].next;
}

CycleGraph::VertexId CycleGraph::prev(VertexId v) const {
    check(v);
    return nodes_[v].prev;
}

CycleGraph::VertexId CycleGraph::ngh(VertexId v, int n) const {
    check(v);
    VertexId cur = v;
    for (int i = 0; i < std::abs(n); ++i) cur = n > 0 ? nodes_[cur].next : nodes_[cur].prev;
    return cur;
}

Coord CycleGraph::coord(VertexId v) const {
    check(v);
    return nodes_[v].coord;
}

SegmentType CycleGraph::out_type(VertexId v) const {
    check(v);
    return nodes_[v].out_type;
}

void CycleGraph::set_out_type(VertexId v, SegmentType t) {
    check(v);
    nodes_[v].out_type = t;
}

Direction CycleGraph::dir_out(VertexId v) const {
    check(v);
    return segment_direction(nodes_[v].coord, nodes_[nodes_[v].next].coord);
}

Coord CycleGraph::mirror(VertexId v) const {
    check(v);
    return nodes_[nodes_[v].prev].coord + nodes_[nodes_[v].next].coord - nodes_[v].coord;
}

CycleGraph::VertexId CycleGraph::lex_min() const {
    VertexId best = kNone;
    for (VertexId v = 0; v < static_cast<VertexId>(nodes_.size()); ++v) {
        if (!nodes_[v].alive) continue;
        if (best == kNone || nodes_[v].coord < nodes_[best].coord) best = v;
    }
    return best;
}

CycleGraph::VertexId CycleGraph::find(Coord c) const {
    for (VertexId v = 0; v < static_cast<VertexId>(nodes_.size()); ++v) {
        if (nodes_[v].alive && nodes_[v].coord == c) return v;
    }
    return kNone;
}

std::vector<CycleGraph::VertexId> CycleGraph::order(VertexId from) const {
    std::vector<VertexId> out;
    if (empty()) return out;
    VertexId start = from == kNone ? head_ : from;
    check(start);
    VertexId cur = start;
    do {
        out.push_back(cur);
        cur = nodes_[cur].next;
        if (out.size() > size_) throw std::logic_error("cycle structure corrupt");
    } while (cur != start);
    return out;
}

std::vector<Coord> CycleGraph::coords(VertexId from) const {
    std::vector<Coord> out;
    for (VertexId v : order(from)) out.push_back(nodes_[v].coord);
    return out;
}

CycleGraph::VertexId CycleGraph::unlink(VertexId v) {
    check(v);
    if (size_ <= 2) throw std::logic_error("cannot unlink below 2 vertices");
    VertexId p = nodes_[v].prev;
    VertexId n = nodes_[v].next;
    nodes_[p].next = n;
    nodes_[n].prev = p;
    nodes_[v].alive = false;
    --size_;
    if (head_ == v) head_ = n;
    return n;
}

CycleGraph::VertexId CycleGraph::insert_after(VertexId a, Coord b) {
    check(a);
    VertexId c = nodes_[a].next;
    VertexId v = new_node(b, nodes_[a].out_type);
    nodes_[a].next = v;
    nodes_[v].prev = a;
    nodes_[v].next = c;
    nodes_[c].prev = v;
    return v;
}

CycleGraph::VertexId CycleGraph::remove(VertexId v) {
    check(v);
    Direction in = dir_in(v);
    Direction out = dir_out(v);
    if (in.axis != out.axis)
        throw std::invalid_argument("remove would break axis-alignment at " +
                                    nodes_[v].coord.str());
    if (nodes_[nodes_[v].prev].coord == nodes_[nodes_[v].next].coord)
        throw std::invalid_argument("remove would collapse the cycle at " + nodes_[v].coord.str());
    return unlink(v);
}

CycleGraph::VertexId CycleGraph::insert(VertexId a, Coord b, VertexId c) {
    check(a);
    check(c);
    if (nodes_[a].next != c)
        throw std::invalid_argument("insert: (a, c) is not an edge");
    segment_direction(nodes_[a].coord, b);
    segment_direction(b, nodes_[c].coord);
    return insert_after(a, b);
}

CycleGraph CycleGraph::normalized() const {
    CycleGraph g = *this;
    for (VertexId v = 0; v < static_cast<VertexId>(g.nodes_.size()); ++v) {
        if (g.nodes_[v].alive) g.nodes_[v].out_type = SegmentType::Defect;
    }
    bool changed = true;
    while (changed && g.size() > 2) {
        changed = false;
        for (VertexId v : g.order()) {
            if (!g.alive(v)) continue;
            if (g.size() <= 2) break;
            if (collinear_at(g, v) &&
                g.nodes_[g.nodes_[v].prev].coord != g.nodes_[g.nodes_[v].next].coord) {
                g.unlink(v);
                changed = true;
            }
        }
    }
    return g;
}

bool collinear_at(const CycleGraph& g, CycleGraph::VertexId v) {
    return g.dir_in(v).axis == g.dir_out(v).axis;
}

bool equal_up_to_rotation(const CycleGraph& a, const CycleGraph& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<Coord> ca = a.coords();
    std::vector<Coord> cb = b.coords();
    std::size_t n = ca.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (ca[i] != cb[(i + shift) % n]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

Coord clst(Coord a, Coord b, Coord c) {
    return manhattan(a, b) <= manhattan(a, c) ? b : c;
}

}  // namespace tqc
