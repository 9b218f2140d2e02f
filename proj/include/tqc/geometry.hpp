#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tqc/lattice.hpp"

namespace tqc {

enum class SegmentType { Init, Measure, Inject, Defect };

const char* to_string(SegmentType t);

// One directed, axis-aligned defect segment between two cell centers.
struct Segment {
    Coord begin;
    Coord end;
    SegmentType type = SegmentType::Defect;

    bool operator==(const Segment&) const = default;
    Direction direction() const { return segment_direction(begin, end); }
};

// A logical qubit: a closed chain of typed segments on one layer's centers.
struct LogicalQubitGeometry {
    std::string id;
    Layer layer = Layer::Primal;
    std::vector<Segment> segments;

    bool operator==(const LogicalQubitGeometry&) const = default;
};

struct GeometryDoc {
    LatticeSpec lattice;
    std::vector<LogicalQubitGeometry> qubits;  // sorted by id

    bool operator==(const GeometryDoc&) const = default;
};

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + msg),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Parses the line-oriented geometry format:
//   lattice <mc_w> <mc_h> <mc_t>
//   logical <id> <primal|dual>
//   segment <id> <defect|init|measure|inject> <w,h,t> <w,h,t>
// '#' starts a comment. Segments are listed in cycle order per qubit and the
// last end must equal the first begin. Fully validates the result.
GeometryDoc parse_geometry(const std::string& text);

std::string serialize_geometry(const GeometryDoc& doc);

// Validation entry point used by parse_geometry; throws ParseError (with the
// offending line when known) or std::invalid_argument for programmatic input.
void validate_geometry(const GeometryDoc& doc);

// Direction changes of the closed chain after collapsing collinear runs.
int pivot_count(const LogicalQubitGeometry& q);

}  // namespace tqc
