#pragma once

#include <string>
#include <vector>

#include "tqc/lattice.hpp"
#include "tqc/sheet_mapper.hpp"
#include "tqc/tube_mapper.hpp"

namespace tqc {

// One line per physical qubit of the lattice, sorted by (t, h, w):
//   <w> <h> <t> <X|Z|RZ:name>
// Z for defect-internal qubits, RZ for the designated qubit of each
// injection point, X for everything else. Throws when two distinct qubits
// claim overlapping defect sets.
std::string emit_instructions(const Lattice& lattice, const std::vector<QubitTuple>& qubits);

// Structured text, one block per qubit in id order:
//   qubit <id> <primal|dual>
//   D: w,h,t ...   (and I:, O:, J:, X:, Z:)
std::string emit_tracking(const std::vector<QubitTuple>& qubits);

// Inverse of emit_tracking for the six coordinate sets.
std::vector<QubitTuple> parse_tracking(const std::string& text);

// Plain mesh/point list for external 3D viewing: sub-sheet rectangles and
// the tuple's qubit sets as labelled points.
std::string emit_geometry_mesh(const std::vector<QubitTuple>& qubits,
                               const std::vector<std::vector<SubSheet>>& subsheets);

}  // namespace tqc
