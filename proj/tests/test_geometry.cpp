#include <doctest.h>

#include "test_support.hpp"
#include "tqc/geometry.hpp"

using namespace tqc;

namespace {

const char* kIdentityDoc = R"(# single logical qubit, identity
lattice 4 6 7
logical q0 primal
segment q0 defect 3,3,3 3,3,9
segment q0 measure 3,3,9 3,7,9
segment q0 defect 3,7,9 3,7,3
segment q0 init 3,7,3 3,3,3
)";

}  // namespace

TEST_CASE("parse identity document") {
    GeometryDoc doc = parse_geometry(kIdentityDoc);
    CHECK(doc.lattice == LatticeSpec{4, 6, 7});
    REQUIRE(doc.qubits.size() == 1);
    const LogicalQubitGeometry& q = doc.qubits[0];
    CHECK(q.id == "q0");
    CHECK(q.layer == Layer::Primal);
    CHECK(q.segments.size() == 4);
    CHECK(q == testing::identity_qubit());
}

TEST_CASE("parse errors carry line and column") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_geometry(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column >= 1);
        }
    };

    expect_error("lattice 2 2\n", 1);                       // arity
    expect_error("lattice 2 2 2\nlogical a up\n", 2);       // bad layer
    expect_error("lattice 2 2 2\nsegment a defect 1,1,1 1,1,3\n", 2);  // undeclared
    expect_error("lattice 2 2 2\nlogical a primal\nsegment a defect 1,1 3,1,1\n", 3);
    expect_error("nonsense\n", 1);
}

TEST_CASE("validation rejects malformed geometry") {
    auto doc_with = [](const std::string& segments) {
        return "lattice 6 6 6\nlogical a primal\n" + segments;
    };
    // Non-axis-aligned.
    CHECK_THROWS_AS(parse_geometry(doc_with("segment a defect 1,1,1 3,3,1\n")), ParseError);
    // Parity violation: even coordinate on a primal qubit.
    CHECK_THROWS_AS(parse_geometry(doc_with("segment a defect 2,1,1 2,1,5\n")), ParseError);
    // Open cycle.
    CHECK_THROWS_AS(parse_geometry(doc_with("segment a defect 1,1,1 1,1,5\n"
                                            "segment a defect 1,1,5 1,5,5\n"
                                            "segment a defect 1,5,5 1,5,1\n")),
                    ParseError);
    // Out of bounds.
    CHECK_THROWS_AS(parse_geometry(doc_with("segment a defect 1,1,1 1,1,23\n")), ParseError);
    // Duplicate id.
    CHECK_THROWS_AS(parse_geometry("lattice 4 4 4\nlogical a primal\nlogical a dual\n"),
                    ParseError);
    // Zero-length.
    CHECK_THROWS_AS(parse_geometry(doc_with("segment a defect 1,1,1 1,1,1\n")), ParseError);
    // Inject whose midpoint is not a center.
    CHECK_THROWS_AS(parse_geometry(doc_with("segment a inject 1,1,1 1,1,3\n")), ParseError);
}

TEST_CASE("odd pivot count is rejected") {
    // Nine-pivot rectilinear cycle (three edges per axis).
    std::vector<Coord> pivots = {{1, 1, 1}, {3, 1, 1}, {3, 3, 1}, {3, 3, 3}, {5, 3, 3},
                                 {5, 5, 3}, {5, 5, 5}, {1, 5, 5}, {1, 1, 5}};
    GeometryDoc doc{{6, 6, 6}, {testing::defect_cycle("a", Layer::Primal, pivots)}};
    CHECK_THROWS_WITH_AS(validate_geometry(doc),
                         doctest::Contains("odd pivot count"), std::invalid_argument);
}

TEST_CASE("round trip through serialize and parse") {
    for (const GeometryDoc& doc :
         {parse_geometry(kIdentityDoc), testing::cnot_circuit(),
          GeometryDoc{testing::staircase_lattice(16), {testing::staircase_qubit(16)}}}) {
        GeometryDoc again = parse_geometry(serialize_geometry(doc));
        CHECK(again == doc);
    }
}

TEST_CASE("cnot circuit document shape") {
    GeometryDoc doc = testing::cnot_circuit();
    REQUIRE(doc.qubits.size() == 4);
    CHECK(doc.qubits[0].id == "q1");
    CHECK(doc.qubits[0].layer == Layer::Primal);
    CHECK(doc.qubits[1].layer == Layer::Primal);
    CHECK(doc.qubits[2].id == "q3");
    CHECK(doc.qubits[2].layer == Layer::Dual);
    CHECK(doc.qubits[3].layer == Layer::Primal);
}

TEST_CASE("collinear same-type runs merge when building the cycle graph") {
    // Straight defect path split into two segments plus the return loop.
    LogicalQubitGeometry q;
    q.id = "a";
    q.layer = Layer::Primal;
    q.segments = {
        {{1, 1, 1}, {1, 1, 5}, SegmentType::Defect},
        {{1, 1, 5}, {1, 1, 9}, SegmentType::Defect},
        {{1, 5, 9}, {1, 5, 1}, SegmentType::Defect},
        {{1, 5, 1}, {1, 1, 1}, SegmentType::Defect},
    };
    q.segments.insert(q.segments.begin() + 2, {{1, 1, 9}, {1, 5, 9}, SegmentType::Defect});

    // Independent oracle: count direction changes over the raw chain.
    CHECK(pivot_count(q) == 4);

    CycleGraph g = CycleGraph::from_geometry(q);
    CHECK(g.size() == 4);
    CHECK(g.size() % 2 == 0);

    // Different types at a collinear joint stay separate edges.
    LogicalQubitGeometry mixed = q;
    mixed.segments[0].type = SegmentType::Init;
    CycleGraph gm = CycleGraph::from_geometry(mixed);
    CHECK(gm.size() == 5);
    CHECK(gm.normalized().size() == 4);
}

TEST_CASE("random cycles validate") {
    for (std::uint32_t seed = 1; seed <= 12; ++seed) {
        Layer layer = seed % 2 == 0 ? Layer::Primal : Layer::Dual;
        LogicalQubitGeometry q = testing::random_cycle(seed, layer);
        GeometryDoc doc{testing::random_cycle_lattice(), {q}};
        CHECK_NOTHROW(validate_geometry(doc));
        CHECK(pivot_count(q) % 2 == 0);
    }
}
