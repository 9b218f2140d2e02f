#include "tqc/sheet_mapper.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqc {

int SubSheet::extent() const {
    int differing = (ss1.w != ss2.w) + (ss1.h != ss2.h) + (ss1.t != ss2.t);
    return differing;
}

SubSheet SubSheet::normalized() const {
    SubSheet out;
    for (Axis a : kAxes) {
        out.ss1[a] = std::min(ss1[a], ss2[a]);
        out.ss2[a] = std::max(ss1[a], ss2[a]);
    }
    return out;
}

ReduceReport reduce(CycleGraph& g, CycleGraph::VertexId a, CycleGraph::VertexId b) {
    if (g.next(a) != b) throw std::invalid_argument("reduce: (a, b) is not an edge");
    CycleGraph::VertexId n_a = g.prev(a);
    CycleGraph::VertexId n_b = g.next(b);
    if (g.size() < 4) throw std::invalid_argument("reduce: needs at least 4 vertices");
    Direction in = g.dir_out(n_a);
    Direction out = g.dir_out(b);
    if (!(in == -out))
        throw std::invalid_argument("reduce: flanking directions are not opposite");

    Coord ca = g.coord(a);
    Coord cb = g.coord(b);
    Coord c_na = g.coord(n_a);
    Coord c_nb = g.coord(n_b);
    Coord mirr_a = g.mirror(a);  // c_na + cb - ca
    Coord mirr_b = g.mirror(b);  // ca + c_nb - cb

    // V^red = { clst(a, mirr(b), n_a), clst(b, mirr(a), n_b) }. A flank
    // neighbor chosen strictly over the mirror is the fold's absorb
    // candidate; a mirror chosen strictly is inserted. Ties mean the mirror
    // coincides with the neighbor and the fold is a clean rectangle.
    std::optional<Coord> to_insert;
    CycleGraph::VertexId absorb = CycleGraph::kNone;
    Coord v1 = clst(ca, mirr_b, c_na);
    Coord v2 = clst(cb, mirr_a, c_nb);
    if (v1 == mirr_b && mirr_b != c_na) {
        to_insert = mirr_b;
    } else if (v1 == c_na && manhattan(ca, c_na) < manhattan(ca, mirr_b)) {
        absorb = n_a;
    }
    if (v2 == mirr_a && mirr_a != c_nb) {
        to_insert = mirr_a;
    } else if (v2 == c_nb && manhattan(cb, c_nb) < manhattan(cb, mirr_a)) {
        absorb = n_b;
    }

    ReduceReport rep;
    rep.removed_a = ca;
    rep.removed_b = cb;

    g.unlink(a);
    g.unlink(b);

    CycleGraph::VertexId anchor = n_b;
    if (to_insert) {
        anchor = g.insert_after(n_a, *to_insert);
        rep.inserted = *to_insert;
    }
    if (absorb != CycleGraph::kNone && g.alive(absorb) && g.size() > 2 &&
        collinear_at(g, absorb) && g.coord(g.prev(absorb)) != g.coord(g.next(absorb))) {
        rep.deleted = g.coord(absorb);
        if (anchor == absorb) anchor = g.next(absorb);
        g.unlink(absorb);
    }

    rep.anchor = anchor;
    rep.rec1 = {g.coord(anchor), ca};
    rep.rec2 = {g.coord(anchor), cb};
    return rep;
}

CycleGraph::VertexId reshape(CycleGraph& g, CycleGraph::VertexId a, CycleGraph::VertexId b,
                             CycleGraph::VertexId c) {
    if (g.next(a) != b || g.next(b) != c)
        throw std::invalid_argument("reshape: (a, b) and (b, c) must be consecutive edges");
    Coord m = g.mirror(b);
    g.unlink(b);
    return g.insert_after(a, m);
}

SheetResult find_subsheets(CycleGraph graph, const SheetOptions& opts) {
    SheetResult result;
    SheetStats& stats = result.stats;

    CycleGraph g = graph.normalized();
    if (g.size() < 4) throw std::invalid_argument("find_subsheets: cycle has fewer than 4 pivots");
    if (g.size() % 2 != 0)
        throw std::invalid_argument("find_subsheets: cycle has odd vertex count " +
                                    std::to_string(g.size()));

    std::size_t max_traversals =
        opts.max_traversals > 0 ? opts.max_traversals : 16 * g.size() * g.size() + 64;

    CycleGraph::VertexId anchor = g.lex_min();
    if (opts.start_rotation) {
        std::vector<CycleGraph::VertexId> ord = g.order(anchor);
        anchor = ord[*opts.start_rotation % ord.size()];
    }
    std::size_t consecutive_reshapes = 0;

    while (g.size() > 2) {
        if (stats.traversals >= max_traversals)
            throw std::runtime_error("find_subsheets: traversal bound exceeded (corrupt input?)");
        if (!g.alive(anchor)) anchor = g.lex_min();

        bool rewrote = false;
        CycleGraph::VertexId ck = anchor;
        while (g.size() > 2) {
            CycleGraph::VertexId a = g.next(ck);
            CycleGraph::VertexId b = g.next(a);
            Direction lead = g.dir_out(ck);
            bool did_rewrite = false;
            if (g.size() >= 4 && lead == -g.dir_out(b)) {
                ReduceReport rep = reduce(g, a, b);
                result.subs.push_back(rep.rec1);
                result.subs.push_back(rep.rec2);
                ++stats.reduces;
                if (!g.alive(anchor)) anchor = rep.anchor;
                did_rewrite = true;
            } else if (lead.axis == g.dir_out(a).axis) {
                CycleGraph::VertexId succ = g.next(a);
                if (g.coord(ck) == g.coord(succ)) {
                    // Degenerate pinch: fold the reversal away entirely.
                    g.unlink(a);
                    if (!g.alive(anchor)) anchor = succ;
                    if (g.size() > 2) {
                        if (anchor == ck) anchor = succ;
                        g.unlink(ck);
                    }
                    ++stats.removes;
                } else {
                    g.remove(a);
                    if (anchor == a) anchor = succ;
                    ++stats.removes;
                }
                did_rewrite = true;
            }
            if (did_rewrite) {
                rewrote = true;
                consecutive_reshapes = 0;
                if (g.size() <= 2) break;
                if (!g.alive(anchor)) anchor = g.lex_min();
                ck = anchor;  // rescan from the anchor after every rewrite
                continue;
            }
            ck = a;
            if (ck == anchor) break;
        }
        ++stats.traversals;
        if (g.size() % 2 != 0) ++stats.odd_boundaries;
        if (g.size() <= 2) break;

        if (!rewrote) {
            CycleGraph::VertexId b = g.next(anchor);
            CycleGraph::VertexId c = g.next(b);
            result.subs.push_back({g.coord(anchor), g.coord(c)});
            reshape(g, anchor, b, c);
            ++stats.reshapes;
            ++consecutive_reshapes;
            stats.max_consecutive_reshapes =
                std::max(stats.max_consecutive_reshapes, consecutive_reshapes);
            anchor = g.next(anchor);
        } else {
            anchor = g.lex_min();
        }
    }
    return result;
}

CoordSet boundingbox(const Lattice& lattice, const SubSheet& ss) {
    SubSheet n = ss.normalized();
    CoordSet out;
    for (int w = n.ss1.w; w <= n.ss2.w; ++w) {
        for (int h = n.ss1.h; h <= n.ss2.h; ++h) {
            for (int t = n.ss1.t; t <= n.ss2.t; ++t) {
                Coord c{w, h, t};
                if (lattice.contains(c) && is_qubit_class(parity_class(c))) out.insert(c);
            }
        }
    }
    return out;
}

void assemble_sheet(const Lattice& lattice, const std::vector<SubSheet>& subs, QubitTuple& q) {
    PositionClass sides = side_class(q.layer);
    CoordSet sheet;
    for (const SubSheet& ss : subs) {
        CoordSet patch;
        for (Coord c : boundingbox(lattice, ss)) {
            if (parity_class(c) == sides) patch.insert(c);
        }
        sheet = set_xor(sheet, patch);
    }
    q.sheet() = std::move(sheet);
}

}  // namespace tqc
