// Acceptance suite: runs each criterion end to end and prints one PASS/FAIL
// line per criterion. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "test_support.hpp"
#include "tqc/compiler.hpp"
#include "tqc/emitter.hpp"
#include "tqc/verifier.hpp"

using namespace tqc;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string name;
    std::function<void()> run;
    double time_limit_s = 0.0;  // 0 = no limit
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

SubSheet norm(Coord a, Coord b) { return SubSheet{a, b}.normalized(); }

std::vector<SubSheet> areas(const std::vector<SubSheet>& subs) {
    std::vector<SubSheet> out;
    for (const SubSheet& s : subs) {
        if (!s.degenerate()) out.push_back(s.normalized());
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1
void fig5_trace() {
    testing::TenVertexLoop fig;
    Lattice lat(fig.lattice());
    CycleGraph g = CycleGraph::from_geometry(fig.geometry());
    SheetResult r = find_subsheets(g);

    std::vector<SubSheet> area = areas(r.subs);
    require(area.size() == 4, "expected 4 area sub-sheets, got " + std::to_string(area.size()));
    require(area[0] == norm(fig.E, fig.G), "first sub-sheet is not (E,G)");
    require(area[1] == norm(fig.A, fig.C), "second sub-sheet is not (A,C)");
    require(r.stats.reshapes == 1, "expected exactly one reshape");
    std::vector<SubSheet> want = {norm(fig.A, fig.I), norm(fig.C, fig.I), norm(fig.A, fig.C),
                                  norm(fig.E, fig.G)};
    std::sort(want.begin(), want.end(), [](const SubSheet& x, const SubSheet& y) {
        return std::tie(x.ss1, x.ss2) < std::tie(y.ss1, y.ss2);
    });
    std::vector<SubSheet> got = area;
    std::sort(got.begin(), got.end(), [](const SubSheet& x, const SubSheet& y) {
        return std::tie(x.ss1, x.ss2) < std::tie(y.ss1, y.ss2);
    });
    require(got == want, "final sub-sheet set differs from {(A,I),(C,I),(A,C),(E,G)}");

    // Identical sheet for every start rotation.
    QubitTuple ref;
    ref.layer = Layer::Primal;
    assemble_sheet(lat, r.subs, ref);
    for (std::size_t rot = 0; rot < 10; ++rot) {
        SheetOptions opts;
        opts.start_rotation = rot;
        QubitTuple alt;
        alt.layer = Layer::Primal;
        assemble_sheet(lat, find_subsheets(g, opts).subs, alt);
        require(alt.sheet() == ref.sheet(),
                "sheet differs for start rotation " + std::to_string(rot));
    }
}

// ---------------------------------------------------------------- criterion 2
void fig7_cases() {
    // Case 1: clean rectangular notch; reduce removes the pair, both flanks
    // become collinear and are removed, |K| drops by 4 in total.
    {
        testing::NotchLoopEqual fig;
        CycleGraph g = CycleGraph::from_geometry(fig.geometry());
        auto a = g.find(fig.C);
        auto b = g.find(fig.D);
        ReduceReport rep = reduce(g, a, b);
        require(g.size() == 6, "case 1: reduce should leave 6 vertices");
        require(!rep.inserted && !rep.deleted, "case 1: fold should insert/delete nothing");
        auto vb = g.find(fig.B);
        auto ve = g.find(fig.E);
        require(vb != CycleGraph::kNone && collinear_at(g, vb), "case 1: B not collinear");
        require(ve != CycleGraph::kNone && collinear_at(g, ve), "case 1: E not collinear");
        g.remove(vb);
        g.remove(ve);
        require(g.size() == 4, "case 1: |K| should drop by 4 overall");
    }
    // Case 2: asymmetric notch; V_ins = {C'}, V_del = {B}.
    {
        testing::NotchLoopAsym fig;
        CycleGraph g = CycleGraph::from_geometry(fig.geometry());
        ReduceReport rep = reduce(g, g.find(fig.C), g.find(fig.D));
        require(rep.inserted && *rep.inserted == fig.Cp, "case 2: expected insert of C'");
        require(rep.deleted && *rep.deleted == fig.B, "case 2: expected delete of B");
        require(g.size() == 6, "case 2: |K| should drop by 2");
    }
    // Case 3: reshape replaces C by C'; a second reshape is the identity.
    {
        testing::NotchLoopAsym fig;
        CycleGraph g = CycleGraph::from_geometry(fig.geometry());
        CycleGraph original = g;
        auto moved = reshape(g, g.find(fig.B), g.find(fig.C), g.find(fig.D));
        require(g.coord(moved) == fig.Cp, "case 3: reshape should move C to C'");
        require(g.find(fig.C) == CycleGraph::kNone, "case 3: C should be gone");
        reshape(g, g.find(fig.B), moved, g.find(fig.D));
        require(equal_up_to_rotation(g, original), "case 3: double reshape is not the identity");
    }
}

// ---------------------------------------------------------------- criterion 3
void cnot_end_to_end() {
    GeometryDoc doc = testing::cnot_circuit();
    require(doc.lattice.mc_w <= 20 && doc.lattice.mc_h <= 20 && doc.lattice.mc_t <= 40,
            "lattice exceeds 20x20x40 cells");
    doc = parse_geometry(serialize_geometry(doc));

    CompiledCircuit circuit = compile_circuit(doc);
    Lattice lat(circuit.lattice);
    require(circuit.qubits.size() == 4, "expected 4 mapped qubits");

    for (const CompiledQubit& q : circuit.qubits) {
        SurfaceReport sheet = verify_surface(lat, q.tuple.sheet(), q.tuple, SurfaceKind::Sheet);
        SurfaceReport tube = verify_surface(lat, q.tuple.tube(), q.tuple, SurfaceKind::Tube);
        TupleReport tuple = verify_tuple(lat, q.tuple);
        require(sheet.pass, q.tuple.id + ": sheet failed: " + sheet.line());
        require(tube.pass, q.tuple.id + ": tube failed: " + tube.line());
        require(tuple.pass, q.tuple.id + ": tuple failed: " + tuple.line());
    }

    // The instruction stream covers every physical qubit exactly once.
    std::string instr = emit_instructions(lat, circuit.tuples());
    std::istringstream in(instr);
    std::string line;
    CoordSet seen;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Coord c;
        char basis[32];
        require(std::sscanf(line.c_str(), "%d %d %d %31s", &c.w, &c.h, &c.t, basis) == 4,
                "bad instruction line: " + line);
        require(is_qubit_class(lat.classify(c)), "instruction on non-qubit coordinate");
        require(seen.insert(c).second, "duplicate instruction for " + c.str());
        ++count;
    }
    require(count == lat.all_qubits().size(),
            "instruction stream does not cover the lattice exactly once");
}

// ---------------------------------------------------------------- criterion 4
void random_property_suite() {
    const int n = 200;
    int ran = 0;
    for (int i = 0; i < n; ++i) {
        std::uint32_t seed = 1000 + static_cast<std::uint32_t>(i);
        Layer layer = i % 2 ? Layer::Dual : Layer::Primal;
        LogicalQubitGeometry geo = testing::random_cycle(seed, layer);
        Lattice lat(testing::random_cycle_lattice());
        require(CycleGraph::from_geometry(geo).normalized().size() <= 40,
                "generator exceeded 40 pivots");

        CompiledQubit q = compile_qubit(lat, geo);
        require(q.sheet_stats.odd_boundaries == 0,
                geo.id + ": vertex count went odd at a traversal boundary");
        SurfaceReport sheet = verify_surface(lat, q.tuple.sheet(), q.tuple, SurfaceKind::Sheet);
        SurfaceReport tube = verify_surface(lat, q.tuple.tube(), q.tuple, SurfaceKind::Tube);
        TupleReport tuple = verify_tuple(lat, q.tuple);
        require(sheet.pass, geo.id + ": sheet failed: " + sheet.line());
        require(tube.pass, geo.id + ": tube failed: " + tube.line());
        require(tuple.pass, geo.id + ": tuple failed: " + tuple.line());
        ++ran;
    }
    require(ran == n, "expected 200 geometries");
}

// ---------------------------------------------------------------- criterion 5
void complexity_bounds() {
    std::vector<int> sizes = {8, 16, 32, 64};
    std::vector<double> ratios;
    for (int k : sizes) {
        LogicalQubitGeometry geo = testing::staircase_qubit(k);
        Lattice lat(testing::staircase_lattice(k));
        CycleGraph g = CycleGraph::from_geometry(geo);
        require(static_cast<int>(g.size()) == k, "staircase size mismatch");

        TubeResult tubes = map_tubes(lat, g, Layer::Primal, geo.id);
        require(tubes.stats.visits == static_cast<std::size_t>(k),
                "tube visit count is not |K| for K=" + std::to_string(k));

        SheetResult r = find_subsheets(g);
        require(r.stats.max_consecutive_reshapes <= static_cast<std::size_t>(k - 3),
                "consecutive reshapes exceed |K|-3 for K=" + std::to_string(k));
        ratios.push_back(static_cast<double>(r.stats.traversals) / (double(k) * double(k)));
    }
    double lo = *std::min_element(ratios.begin(), ratios.end());
    double hi = *std::max_element(ratios.begin(), ratios.end());
    require(lo > 0, "no traversals measured");
    require(hi / lo <= 4.0, "traversal counts do not fit c*K^2 within a factor of 4 (spread " +
                                std::to_string(hi / lo) + ")");
}

// ---------------------------------------------------------------- criterion 6
void lattice_accounting() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(1, 6);
    for (int i = 0; i < 20; ++i) {
        LatticeSpec spec{pick(rng), pick(rng), pick(rng)};
        Lattice lat(spec);
        std::int64_t want =
            std::int64_t(2 * spec.mc_w + 2) * (2 * spec.mc_h + 2) * (2 * spec.mc_t + 2);
        require(total_positions(spec) == want, "total_positions mismatch");

        std::int64_t qubits = 0, centers = 0;
        for (int w = 0; w < lat.size(Axis::W); ++w) {
            for (int h = 0; h < lat.size(Axis::H); ++h) {
                for (int t = 0; t < lat.size(Axis::T); ++t) {
                    PositionClass c = lat.classify({w, h, t});
                    require(is_qubit_class(c) != is_center_class(c), "class not exclusive");
                    (is_qubit_class(c) ? qubits : centers) += 1;
                }
            }
        }
        require(qubits + centers == want, "classes do not partition the positions");

        // Every interior unit cell holds 18 qubits among its 27 positions.
        for (Coord cc : {Coord{1, 1, 1}, Coord{2, 2, 2}}) {
            if (!lat.cell_interior(cc)) continue;
            int in_cell = 0;
            for (int dw = -1; dw <= 1; ++dw) {
                for (int dh = -1; dh <= 1; ++dh) {
                    for (int dt = -1; dt <= 1; ++dt) {
                        Coord p{cc.w + dw, cc.h + dh, cc.t + dt};
                        if (is_qubit_class(lat.classify(p))) ++in_cell;
                    }
                }
            }
            require(in_cell == 18, "unit cell does not hold 18 qubits");
        }
    }
}

// ---------------------------------------------------------------- criterion 7
void determinism_and_round_trip() {
    GeometryDoc doc = testing::cnot_circuit();
    std::string text = serialize_geometry(doc);

    std::string instr_ref, track_ref;
    for (int run = 0; run < 5; ++run) {
        GeometryDoc parsed = parse_geometry(text);
        require(parsed == doc, "geometry round trip mismatch");
        CompiledCircuit circuit = compile_circuit(parsed);
        Lattice lat(circuit.lattice);
        std::string instr = emit_instructions(lat, circuit.tuples());
        std::string track = emit_tracking(circuit.tuples());
        if (run == 0) {
            instr_ref = instr;
            track_ref = track;
        } else {
            require(instr == instr_ref, "instruction stream differs between runs");
            require(track == track_ref, "tracking document differs between runs");
        }
    }

    std::vector<QubitTuple> parsed_back = parse_tracking(track_ref);
    CompiledCircuit circuit = compile_circuit(doc);
    require(parsed_back.size() == circuit.qubits.size(), "tracking round trip lost qubits");
    for (std::size_t i = 0; i < parsed_back.size(); ++i) {
        const QubitTuple& a = parsed_back[i];
        const QubitTuple& b = circuit.qubits[i].tuple;
        require(a.id == b.id && a.layer == b.layer, "tracking round trip header mismatch");
        require(a.defect == b.defect && a.inputs == b.inputs && a.outputs == b.outputs &&
                    a.inject == b.inject && a.x == b.x && a.z == b.z,
                "tracking round trip set mismatch");
    }
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"fig5-trace-and-rotation-sweep", fig5_trace, 1.0},
        {"rewrite-cases", fig7_cases, 1.0},
        {"cnot-end-to-end", cnot_end_to_end, 10.0},
        {"stabilizer-oracle-random-suite", random_property_suite, 60.0},
        {"complexity-bounds", complexity_bounds, 0.0},
        {"lattice-accounting", lattice_accounting, 0.0},
        {"determinism-and-round-trip", determinism_and_round_trip, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto begin = Clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - begin).count();
        if (error.empty() && c.time_limit_s > 0 && secs > c.time_limit_s) {
            error = "exceeded time limit of " + std::to_string(c.time_limit_s) + "s";
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        if (error.empty()) {
            std::cout << "PASS criterion-" << (i + 1) << " " << c.name << " (" << buf << ")\n";
        } else {
            std::cout << "FAIL criterion-" << (i + 1) << " " << c.name << " (" << buf
                      << "): " << error << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
